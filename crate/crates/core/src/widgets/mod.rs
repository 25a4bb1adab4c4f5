//! The widget contract and the simple controls.
//!
//! Every widget owns a [`WidgetBase`] and paints its whole rect opaquely.
//! Widgets never poll input: the event loop in [`crate::events`] delivers
//! keys and clicks and acts on the [`Response`] they return.

mod button;
mod checkbox;
mod combobox;
mod editbox;
mod label;
mod listbox;
mod panel;
mod progress;
mod scrollbar;
mod spinner;
mod textbox;
pub mod theme;

use std::any::Any;

use crate::backend::KeyCode;
use crate::events::{ClickVerdict, GlobalHook, ModalCx, ModalOutcome, WidgetId};
use crate::geometry::Rect;
use crate::render::FrameBuffer;
use crate::winmgr::WindowHit;

pub use button::Button;
pub use checkbox::{CheckBox, ToggleVia};
pub use combobox::ComboBox;
pub use editbox::{EditBox, EditBoxState, EditDamage};
pub use label::{Fill, Label};
pub use listbox::{item_at_row, ListBox, ListBoxState};
pub use panel::Panel;
pub use progress::ProgressBar;
pub use scrollbar::{Orientation, ScrollBar, ScrollBarState};
pub use spinner::{Spinner, SpinnerAction, SpinnerState};
pub use textbox::{TextBox, TextBoxState};

/// What a widget asks the event loop to do after handling input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Response {
    Ignored,
    Handled,
    /// Value changed: CHANGE handlers fire.
    Changed,
    /// Activated: CLICK handlers fire.
    Clicked,
    /// A library-owned modal loop should run via [`Widget::run_modal`].
    Modal,
    /// Input was debounced away.
    Rejected,
    SwitchTab(usize),
    Window(WindowHit),
    Taskbar(WidgetId),
}

/// Result of a key or edit operation on a widget's own state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Edit {
    Changed,
    Unchanged,
}

/// Geometry, flags and pending damage shared by all widgets.
#[derive(Debug, Clone)]
pub struct WidgetBase {
    pub(crate) id: Option<WidgetId>,
    pub rect: Rect,
    pub visible: bool,
    pub focusable: bool,
    pub parent_clip: Option<Rect>,
    /// Rect relative to the parent's client area, for children.
    pub(crate) anchor: Option<Rect>,
    pub(crate) pinned: bool,
    full_damage: bool,
    damage: Vec<Rect>,
}

impl WidgetBase {
    pub fn new(rect: Rect, focusable: bool) -> WidgetBase {
        WidgetBase {
            id: None,
            rect,
            visible: true,
            focusable,
            parent_clip: None,
            anchor: None,
            pinned: false,
            full_damage: true,
            damage: Vec::new(),
        }
    }

    pub fn id(&self) -> Option<WidgetId> {
        self.id
    }

    /// Marks the whole widget for repaint.
    pub fn invalidate(&mut self) {
        self.full_damage = true;
        self.damage.clear();
    }

    /// Marks part of the widget for repaint.
    pub fn invalidate_rect(&mut self, r: Rect) {
        if self.full_damage || r.is_empty() {
            return;
        }
        if !self.damage.contains(&r) {
            self.damage.push(r);
        }
    }

    pub fn is_dirty(&self) -> bool {
        self.full_damage || !self.damage.is_empty()
    }

    /// Pending damage in screen coordinates; clears it.
    pub fn take_damage(&mut self) -> Vec<Rect> {
        if self.full_damage {
            self.full_damage = false;
            self.damage.clear();
            return vec![self.rect];
        }
        std::mem::take(&mut self.damage)
    }

    pub fn clear_damage(&mut self) {
        self.full_damage = false;
        self.damage.clear();
    }

    /// `rect` limited by the parent clip: where the widget can actually paint.
    pub fn visible_rect(&self) -> Rect {
        match self.parent_clip {
            Some(c) => self.rect.intersect(&c),
            None => self.rect,
        }
    }

    /// Screen coordinates of a 1-based local position.
    pub fn to_screen(&self, lx: i32, ly: i32) -> (i32, i32) {
        (self.rect.x + lx - 1, self.rect.y + ly - 1)
    }
}

pub trait Widget: Any {
    fn base(&self) -> &WidgetBase;
    fn base_mut(&mut self) -> &mut WidgetBase;

    /// Paints the full widget. The caller has already pushed the clip.
    fn draw(&self, fb: &mut FrameBuffer, focused: bool);

    fn handle_key(&mut self, _key: KeyCode) -> Response {
        Response::Ignored
    }

    /// `x`, `y` are 1-based and relative to the widget's rect.
    fn handle_mouse(&mut self, _x: i32, _y: i32, _verdict: ClickVerdict) -> Response {
        Response::Ignored
    }

    fn focus_changed(&mut self, _focused: bool) {}

    /// Hardware cursor position (screen coordinates) while focused.
    fn cursor(&self) -> Option<(i32, i32)> {
        None
    }

    /// Area children are laid out in and clipped to; `None` for leaf widgets.
    fn client_rect(&self) -> Option<Rect> {
        None
    }

    /// Screen-wide keys this widget needs while registered.
    fn hooks(&self) -> Vec<(KeyCode, GlobalHook)> {
        Vec::new()
    }

    /// For containers with pages: which page's children are shown.
    fn active_page(&self) -> Option<usize> {
        None
    }

    fn run_modal(&mut self, _cx: &mut ModalCx<'_>) -> ModalOutcome {
        ModalOutcome::default()
    }

    fn kind(&self) -> &'static str;

    fn as_any(&self) -> &dyn Any;
    fn as_any_mut(&mut self) -> &mut dyn Any;
}

macro_rules! widget_boilerplate {
    ($kind:literal) => {
        fn base(&self) -> &$crate::widgets::WidgetBase {
            &self.base
        }
        fn base_mut(&mut self) -> &mut $crate::widgets::WidgetBase {
            &mut self.base
        }
        fn kind(&self) -> &'static str {
            $kind
        }
        fn as_any(&self) -> &dyn std::any::Any {
            self
        }
        fn as_any_mut(&mut self) -> &mut dyn std::any::Any {
            self
        }
    };
}
pub(crate) use widget_boilerplate;
