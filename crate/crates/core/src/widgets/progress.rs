use crate::geometry::Rect;
use crate::render::FrameBuffer;

use super::{theme, widget_boilerplate, Widget, WidgetBase};

/// `[####----] NN%`; display only.
pub struct ProgressBar {
    base: WidgetBase,
    value: u8,
}

impl ProgressBar {
    /// `width` covers the brackets and the percentage.
    pub fn new(x: i32, y: i32, width: i32) -> ProgressBar {
        ProgressBar { base: WidgetBase::new(Rect::new(x, y, width.max(8), 1), false), value: 0 }
    }

    pub fn value(&self) -> u8 {
        self.value
    }

    /// Clamped to 0..=100.
    pub fn set_value(&mut self, value: i32) {
        let v = value.clamp(0, 100) as u8;
        if v != self.value {
            self.value = v;
            self.base.invalidate();
        }
    }

    /// Cells between the brackets.
    pub fn inner_width(&self) -> usize {
        (self.base.rect.w - 2 - 5).max(0) as usize
    }

    /// Filled cells: `value / 100 * inner` rounded half up.
    pub fn filled(&self) -> usize {
        (self.value as usize * self.inner_width() * 2 + 100) / 200
    }

    pub fn render_text(&self) -> String {
        let inner = self.inner_width();
        let filled = self.filled();
        format!("[{}{}] {:>3}%", "#".repeat(filled), "-".repeat(inner - filled), self.value)
    }
}

impl Widget for ProgressBar {
    widget_boilerplate!("ProgressBar");

    fn draw(&self, fb: &mut FrameBuffer, _focused: bool) {
        let r = self.base.rect;
        fb.fill_rect(r, ' ', theme::LABEL.fg, theme::LABEL.bg);
        let text = self.render_text();
        fb.put_str(r.x, r.y, &text, theme::LABEL);
        fb.put_str(r.x + 1, r.y, &"#".repeat(self.filled()), theme::PROGRESS_FILL);
    }
}
