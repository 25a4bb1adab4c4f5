use crate::geometry::Rect;
use crate::render::{fixed_width, FrameBuffer, Style};

use super::{theme, widget_boilerplate, Widget, WidgetBase};

/// Static text. Never takes focus.
pub struct Label {
    base: WidgetBase,
    text: String,
    style: Style,
}

impl Label {
    /// A one-row label sized to its text.
    pub fn new(x: i32, y: i32, text: &str) -> Label {
        let w = text.chars().count().max(1) as i32;
        Label::with_rect(Rect::new(x, y, w, 1), text)
    }

    /// A label occupying `rect`; the text is padded or cut to its width.
    pub fn with_rect(rect: Rect, text: &str) -> Label {
        Label { base: WidgetBase::new(rect, false), text: text.to_string(), style: theme::LABEL }
    }

    pub fn styled(mut self, style: Style) -> Label {
        self.style = style;
        self
    }

    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn set_text(&mut self, text: &str) {
        if self.text != text {
            self.text = text.to_string();
            self.base.invalidate();
        }
    }
}

impl Widget for Label {
    widget_boilerplate!("Label");

    fn draw(&self, fb: &mut FrameBuffer, _focused: bool) {
        let r = self.base.rect;
        fb.fill_rect(r, ' ', self.style.fg, self.style.bg);
        for (i, line) in self.text.lines().take(r.h.max(0) as usize).enumerate() {
            fb.put_str(r.x, r.y + i as i32, &fixed_width(line, r.w as usize), self.style);
        }
    }

    fn focus_changed(&mut self, _focused: bool) {
        // labels are never focusable; keep the flag pinned even if a caller flips it
        self.base.focusable = false;
    }
}

/// A solid rectangle, typically a screen or desktop background.
pub struct Fill {
    base: WidgetBase,
    glyph: char,
    style: Style,
}

impl Fill {
    pub fn new(rect: Rect, glyph: char, style: Style) -> Fill {
        Fill { base: WidgetBase::new(rect, false), glyph, style }
    }
}

impl Widget for Fill {
    widget_boilerplate!("Fill");

    fn draw(&self, fb: &mut FrameBuffer, _focused: bool) {
        fb.fill_rect(self.base.rect, self.glyph, self.style.fg, self.style.bg);
    }
}
