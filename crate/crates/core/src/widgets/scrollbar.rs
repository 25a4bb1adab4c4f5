use crate::backend::KeyCode;
use crate::events::ClickVerdict;
use crate::geometry::Rect;
use crate::render::{fixed_width, FrameBuffer};

use super::{theme, widget_boilerplate, Response, Widget, WidgetBase};

/// Gap between a bar and its value label.
const LABEL_GAP: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Horizontal,
    Vertical,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScrollBarState {
    pub orientation: Orientation,
    value: i64,
    min: i64,
    max: i64,
}

impl ScrollBarState {
    /// Panics if `min > max`.
    pub fn new(orientation: Orientation, value: i64, min: i64, max: i64) -> ScrollBarState {
        assert!(min <= max, "invalid scrollbar range");
        ScrollBarState { orientation, value: value.clamp(min, max), min, max }
    }

    pub fn value(&self) -> i64 {
        self.value
    }

    pub fn min(&self) -> i64 {
        self.min
    }

    pub fn max(&self) -> i64 {
        self.max
    }

    /// Stores `v` clamped to the range; returns whether the value changed.
    pub fn set_value(&mut self, v: i64) -> bool {
        let v = v.clamp(self.min, self.max);
        let changed = v != self.value;
        self.value = v;
        changed
    }

    /// Value for a click at 1-based `pos` on a track `track_len` cells long:
    /// `min + round((pos-1)/(track_len-1) * (max-min))`, rounding half up,
    /// clamped to the range.
    pub fn value_at(&self, pos: i32, track_len: i32) -> i64 {
        if track_len <= 1 {
            return self.min;
        }
        let pos = pos.clamp(1, track_len) as i128;
        let span = (self.max - self.min) as i128;
        let den = (track_len - 1) as i128;
        let v = self.min as i128 + ((pos - 1) * span * 2 + den) / (2 * den);
        (v as i64).clamp(self.min, self.max)
    }

    /// Track cell (1-based) that shows the thumb.
    pub fn thumb_pos(&self, track_len: i32) -> i32 {
        if track_len <= 1 || self.max == self.min {
            return 1;
        }
        let span = (self.max - self.min) as i128;
        let off = (self.value - self.min) as i128 * (track_len - 1) as i128;
        1 + ((off * 2 + span) / (2 * span)) as i32
    }

    fn page(&self) -> i64 {
        ((self.max - self.min) / 10).max(1)
    }
}

/// Arrow-capped scroll bar with a numeric value label.
///
/// Horizontal: `<` track `>` followed by the label after a two-cell gap.
/// Vertical: the label sits two cells to the left of the bar column.
pub struct ScrollBar {
    base: WidgetBase,
    state: ScrollBarState,
    length: i32,
    label_w: i32,
}

impl ScrollBar {
    /// `length` counts the bar cells including both arrows (at least 3).
    pub fn new(x: i32, y: i32, length: i32, state: ScrollBarState) -> ScrollBar {
        let length = length.max(3);
        let label_w = state.min.to_string().len().max(state.max.to_string().len()) as i32;
        let rect = match state.orientation {
            Orientation::Horizontal => Rect::new(x, y, length + LABEL_GAP + label_w, 1),
            Orientation::Vertical => Rect::new(x, y, label_w + LABEL_GAP + 1, length),
        };
        ScrollBar { base: WidgetBase::new(rect, true), state, length, label_w }
    }

    pub fn state(&self) -> &ScrollBarState {
        &self.state
    }

    pub fn value(&self) -> i64 {
        self.state.value
    }

    pub fn track_len(&self) -> i32 {
        self.length - 2
    }

    pub fn set_value(&mut self, v: i64) -> bool {
        let changed = self.state.set_value(v);
        if changed {
            self.base.invalidate();
        }
        changed
    }

    /// Bar origin in screen coordinates.
    fn bar_origin(&self) -> (i32, i32) {
        let r = self.base.rect;
        match self.state.orientation {
            Orientation::Horizontal => (r.x, r.y),
            Orientation::Vertical => (r.right(), r.y),
        }
    }

    fn label_origin(&self) -> (i32, i32) {
        let r = self.base.rect;
        match self.state.orientation {
            Orientation::Horizontal => (r.x + self.length + LABEL_GAP, r.y),
            Orientation::Vertical => (r.x, r.y + (self.length - 1) / 2),
        }
    }

    /// Handles a click at 1-based `pos` along the bar (arrows included).
    pub fn click_bar(&mut self, pos: i32) -> Response {
        let v = if pos <= 1 {
            self.state.value - 1
        } else if pos >= self.length {
            self.state.value + 1
        } else {
            self.state.value_at(pos - 1, self.track_len())
        };
        if self.set_value(v) {
            Response::Changed
        } else {
            Response::Handled
        }
    }
}

impl Widget for ScrollBar {
    widget_boilerplate!("ScrollBar");

    fn draw(&self, fb: &mut FrameBuffer, focused: bool) {
        let r = self.base.rect;
        fb.fill_rect(r, ' ', theme::LABEL.fg, theme::LABEL.bg);
        let (bx, by) = self.bar_origin();
        let track = self.track_len();
        let thumb = self.state.thumb_pos(track);
        let (lo, hi, dx, dy) = match self.state.orientation {
            Orientation::Horizontal => ('<', '>', 1, 0),
            Orientation::Vertical => ('^', 'v', 0, 1),
        };
        let arrow = theme::BUTTON;
        let put = |fb: &mut FrameBuffer, i: i32, glyph: char, style: crate::render::Style| {
            fb.put_str(bx + i * dx, by + i * dy, &glyph.to_string(), style);
        };
        put(fb, 0, lo, arrow);
        for i in 1..=track {
            put(fb, i, '.', theme::FIELD);
        }
        put(fb, thumb, '#', theme::focused(theme::SELECTED, focused));
        put(fb, self.length - 1, hi, arrow);
        let (lx, ly) = self.label_origin();
        let text = format!("{:>w$}", self.state.value, w = self.label_w as usize);
        fb.put_str(lx, ly, &fixed_width(&text, self.label_w as usize), theme::LABEL);
    }

    fn handle_key(&mut self, key: KeyCode) -> Response {
        let s = self.state;
        let v = match (s.orientation, key) {
            (Orientation::Horizontal, KeyCode::Left) | (Orientation::Vertical, KeyCode::Up) => s.value - 1,
            (Orientation::Horizontal, KeyCode::Right) | (Orientation::Vertical, KeyCode::Down) => s.value + 1,
            (_, KeyCode::KeyPgUp) => s.value - s.page(),
            (_, KeyCode::KeyPgDown) => s.value + s.page(),
            (_, KeyCode::Home) => s.min,
            (_, KeyCode::End) => s.max,
            _ => return Response::Ignored,
        };
        if self.set_value(v) {
            Response::Changed
        } else {
            Response::Handled
        }
    }

    fn handle_mouse(&mut self, x: i32, y: i32, verdict: ClickVerdict) -> Response {
        if !verdict.accepted() {
            return Response::Rejected;
        }
        let pos = match self.state.orientation {
            Orientation::Horizontal if x <= self.length => x,
            Orientation::Vertical if x == self.base.rect.w => y,
            _ => return Response::Handled,
        };
        self.click_bar(pos)
    }
}
