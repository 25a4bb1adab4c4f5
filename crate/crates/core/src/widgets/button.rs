use crate::backend::KeyCode;
use crate::events::ClickVerdict;
use crate::geometry::Rect;
use crate::render::{fixed_width, FrameBuffer};

use super::{theme, widget_boilerplate, Response, Widget, WidgetBase};

/// `[ Label ]`. ENTER, SPACE or an accepted click fire CLICK handlers.
pub struct Button {
    base: WidgetBase,
    label: String,
}

impl Button {
    pub fn new(x: i32, y: i32, label: &str) -> Button {
        let w = label.chars().count() as i32 + 4;
        Button { base: WidgetBase::new(Rect::new(x, y, w, 1), true), label: label.to_string() }
    }

    pub fn label(&self) -> &str {
        &self.label
    }
}

impl Widget for Button {
    widget_boilerplate!("Button");

    fn draw(&self, fb: &mut FrameBuffer, focused: bool) {
        let r = self.base.rect;
        let style = theme::focused(theme::BUTTON, focused);
        let text = fixed_width(&format!("[ {} ]", self.label), r.w.max(0) as usize);
        fb.fill_rect(r, ' ', style.fg, style.bg);
        fb.put_str(r.x, r.y + (r.h - 1) / 2, &text, style);
    }

    fn handle_key(&mut self, key: KeyCode) -> Response {
        match key {
            KeyCode::Enter | KeyCode::Space => Response::Clicked,
            _ => Response::Ignored,
        }
    }

    fn handle_mouse(&mut self, _x: i32, _y: i32, verdict: ClickVerdict) -> Response {
        if verdict.accepted() {
            Response::Clicked
        } else {
            Response::Rejected
        }
    }
}
