use crate::backend::KeyCode;
use crate::events::ClickVerdict;
use crate::geometry::Rect;
use crate::render::{fixed_width, FrameBuffer};

use super::{theme, widget_boilerplate, Response, Widget, WidgetBase};

/// How a toggle was requested. Mouse toggles carry the click filter's verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ToggleVia {
    Key,
    Mouse(ClickVerdict),
}

/// `[x] Label` / `[ ] Label`.
pub struct CheckBox {
    base: WidgetBase,
    label: String,
    checked: bool,
}

impl CheckBox {
    pub fn new(x: i32, y: i32, label: &str) -> CheckBox {
        let w = label.chars().count() as i32 + 4;
        CheckBox { base: WidgetBase::new(Rect::new(x, y, w, 1), true), label: label.to_string(), checked: false }
    }

    pub fn checked(mut self, checked: bool) -> CheckBox {
        self.checked = checked;
        self
    }

    pub fn is_checked(&self) -> bool {
        self.checked
    }

    pub fn set_checked(&mut self, checked: bool) {
        if self.checked != checked {
            self.checked = checked;
            self.base.invalidate();
        }
    }

    /// Inverts the state unless the click was debounced away.
    pub fn toggle(&mut self, via: ToggleVia) -> Response {
        if via == ToggleVia::Mouse(ClickVerdict::Reject) {
            return Response::Rejected;
        }
        self.checked = !self.checked;
        self.base.invalidate();
        Response::Changed
    }
}

impl Widget for CheckBox {
    widget_boilerplate!("CheckBox");

    fn draw(&self, fb: &mut FrameBuffer, focused: bool) {
        let r = self.base.rect;
        let mark = if self.checked { 'x' } else { ' ' };
        let text = fixed_width(&format!("[{mark}] {}", self.label), r.w.max(0) as usize);
        let style = theme::focused(theme::LABEL, focused);
        fb.fill_rect(r, ' ', theme::LABEL.fg, theme::LABEL.bg);
        fb.put_str(r.x, r.y, &text, style);
    }

    fn handle_key(&mut self, key: KeyCode) -> Response {
        match key {
            KeyCode::Space | KeyCode::Enter => self.toggle(ToggleVia::Key),
            _ => Response::Ignored,
        }
    }

    fn handle_mouse(&mut self, _x: i32, _y: i32, verdict: ClickVerdict) -> Response {
        self.toggle(ToggleVia::Mouse(verdict))
    }
}
