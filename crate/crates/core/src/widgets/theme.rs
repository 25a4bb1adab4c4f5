//! The fixed color palette every widget draws with.

use crate::backend::Color;
use crate::render::Style;

pub const SCREEN: Style = Style::new(Color::White, Color::Black);
pub const LABEL: Style = SCREEN;
pub const FIELD: Style = Style::new(Color::White, Color::Blue);
pub const BUTTON: Style = Style::new(Color::Black, Color::Cyan);
pub const FRAME: Style = Style::new(Color::White, Color::Black);
pub const SELECTED: Style = Style::new(Color::Black, Color::Cyan);
pub const SELECTED_FOCUSED: Style = Style::new(Color::Black, Color::White);
pub const PROGRESS_FILL: Style = Style::new(Color::LightGreen, Color::Black);
pub const POPUP: Style = Style::new(Color::Black, Color::Grey);
pub const POPUP_SELECTED: Style = Style::new(Color::White, Color::Blue);
pub const MENUBAR: Style = Style::new(Color::Black, Color::Grey);
pub const MENUBAR_ACTIVE: Style = Style::new(Color::White, Color::Blue);
pub const DESKTOP: Style = Style::new(Color::White, Color::Blue);
pub const WINDOW: Style = Style::new(Color::White, Color::Black);
pub const WINDOW_TITLE_ACTIVE: Style = Style::new(Color::Black, Color::Cyan);
pub const WINDOW_TITLE_INACTIVE: Style = Style::new(Color::White, Color::DarkGrey);
pub const TASKBAR: Style = Style::new(Color::Black, Color::Grey);
pub const TASKBAR_ACTIVE: Style = Style::new(Color::White, Color::Blue);
pub const TAB_ACTIVE: Style = Style::new(Color::Black, Color::Cyan);
pub const GRID_HEADER: Style = Style::new(Color::Yellow, Color::Black);

/// Focus highlight: inverse video of the normal style.
pub fn focused(style: Style, focused: bool) -> Style {
    if focused {
        style.inverse()
    } else {
        style
    }
}
