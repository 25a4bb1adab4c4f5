use crate::geometry::Rect;
use crate::render::{BorderStyle, FrameBuffer};

use super::{theme, widget_boilerplate, Widget, WidgetBase};

/// Bordered box with an optional title on the top edge. Holds children in
/// its interior.
pub struct Panel {
    base: WidgetBase,
    title: Option<String>,
}

impl Panel {
    pub fn new(rect: Rect) -> Panel {
        Panel { base: WidgetBase::new(rect, false), title: None }
    }

    pub fn titled(mut self, title: &str) -> Panel {
        self.title = Some(title.to_string());
        self
    }

    pub fn title(&self) -> Option<&str> {
        self.title.as_deref()
    }
}

impl Widget for Panel {
    widget_boilerplate!("Panel");

    fn draw(&self, fb: &mut FrameBuffer, _focused: bool) {
        let r = self.base.rect;
        let s = theme::FRAME;
        fb.fill_rect(r, ' ', s.fg, s.bg);
        let _ = fb.draw_border(r, BorderStyle::Single, s.fg, s.bg);
        if let Some(t) = &self.title {
            let text = format!(" {t} ");
            let w = text.chars().count() as i32;
            let x = r.x + ((r.w - w) / 2).max(1);
            fb.with_clip(Rect::new(r.x + 1, r.y, r.w - 2, 1), |fb| fb.put_str(x, r.y, &text, s));
        }
    }

    fn client_rect(&self) -> Option<Rect> {
        Some(self.base.rect.inset(1))
    }
}
