use crate::backend::KeyCode;
use crate::events::ClickVerdict;
use crate::geometry::Rect;
use crate::render::FrameBuffer;

use super::{theme, widget_boilerplate, Edit, Response, Widget, WidgetBase};

/// Single-line edit buffer with a horizontally scrolling view.
///
/// Invariant: `view_offset <= cursor <= view_offset + width - 1` after every
/// operation given the view width, so the cursor is always on a visible cell.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TextBoxState {
    chars: Vec<char>,
    cursor: usize,
    view_offset: usize,
}

impl TextBoxState {
    /// Cursor at the end of `text`.
    pub fn new(text: &str) -> TextBoxState {
        let chars: Vec<char> = text.chars().collect();
        TextBoxState { cursor: chars.len(), chars, view_offset: 0 }
    }

    pub fn text(&self) -> String {
        self.chars.iter().collect()
    }

    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    pub fn cursor(&self) -> usize {
        self.cursor
    }

    pub fn view_offset(&self) -> usize {
        self.view_offset
    }

    pub fn set_text(&mut self, text: &str, width: usize) {
        *self = TextBoxState::new(text);
        self.scroll_to_cursor(width);
    }

    /// The characters shown in a view `width` cells wide.
    pub fn visible(&self, width: usize) -> String {
        self.chars.iter().skip(self.view_offset).take(width).collect()
    }

    /// 1-based column of the cursor inside the view.
    pub fn cursor_column(&self) -> i32 {
        (self.cursor - self.view_offset) as i32 + 1
    }

    /// Moves `view_offset` the minimum needed to show the cursor.
    pub fn scroll_to_cursor(&mut self, width: usize) -> bool {
        let width = width.max(1);
        let before = self.view_offset;
        if self.cursor < self.view_offset {
            self.view_offset = self.cursor;
        } else if self.cursor > self.view_offset + width - 1 {
            self.view_offset = self.cursor + 1 - width;
        }
        self.view_offset != before
    }

    /// Applies an editing or movement key. Returns whether the text changed.
    pub fn handle_key(&mut self, key: KeyCode, width: usize) -> Edit {
        let mut changed = false;
        match key {
            KeyCode::Left => self.cursor = self.cursor.saturating_sub(1),
            KeyCode::Right => self.cursor = (self.cursor + 1).min(self.chars.len()),
            KeyCode::Home => self.cursor = 0,
            KeyCode::End => self.cursor = self.chars.len(),
            KeyCode::Backspace if self.cursor > 0 => {
                self.cursor -= 1;
                self.chars.remove(self.cursor);
                changed = true;
            }
            KeyCode::Delete if self.cursor < self.chars.len() => {
                self.chars.remove(self.cursor);
                changed = true;
            }
            k => {
                if let Some(c) = k.typed_char().filter(|c| !c.is_control()) {
                    self.chars.insert(self.cursor, c);
                    self.cursor += 1;
                    changed = true;
                }
            }
        }
        self.scroll_to_cursor(width);
        if changed {
            Edit::Changed
        } else {
            Edit::Unchanged
        }
    }

    /// Puts the cursor under a click at 1-based view column `col`.
    pub fn click(&mut self, col: i32, width: usize) {
        let idx = self.view_offset as i64 + col.max(1) as i64 - 1;
        self.cursor = (idx as usize).min(self.chars.len());
        self.scroll_to_cursor(width);
    }
}

/// Single-line text input.
pub struct TextBox {
    base: WidgetBase,
    state: TextBoxState,
}

impl TextBox {
    pub fn new(x: i32, y: i32, width: i32) -> TextBox {
        TextBox { base: WidgetBase::new(Rect::new(x, y, width, 1), true), state: TextBoxState::default() }
    }

    pub fn with_text(mut self, text: &str) -> TextBox {
        self.set_text(text);
        self
    }

    fn width(&self) -> usize {
        self.base.rect.w.max(1) as usize
    }

    pub fn text(&self) -> String {
        self.state.text()
    }

    pub fn state(&self) -> &TextBoxState {
        &self.state
    }

    pub fn set_text(&mut self, text: &str) {
        let w = self.width();
        self.state.set_text(text, w);
        self.base.invalidate();
    }
}

impl Widget for TextBox {
    widget_boilerplate!("TextBox");

    fn draw(&self, fb: &mut FrameBuffer, focused: bool) {
        let r = self.base.rect;
        let style = theme::focused(theme::FIELD, focused);
        fb.fill_rect(r, ' ', style.fg, style.bg);
        fb.put_str(r.x, r.y, &self.state.visible(self.width()), style);
    }

    fn handle_key(&mut self, key: KeyCode) -> Response {
        let before = self.state.view_offset();
        let edit = self.state.handle_key(key, self.width());
        let moved = self.state.view_offset() != before;
        if edit == Edit::Changed || moved {
            self.base.invalidate();
        }
        match (edit, key) {
            (Edit::Changed, _) => Response::Changed,
            (_, KeyCode::Left | KeyCode::Right | KeyCode::Home | KeyCode::End) => Response::Handled,
            (_, KeyCode::Backspace | KeyCode::Delete) => Response::Handled,
            _ => Response::Ignored,
        }
    }

    fn handle_mouse(&mut self, x: i32, _y: i32, _verdict: ClickVerdict) -> Response {
        let before = self.state.view_offset();
        self.state.click(x, self.width());
        if self.state.view_offset() != before {
            self.base.invalidate();
        }
        Response::Handled
    }

    fn cursor(&self) -> Option<(i32, i32)> {
        Some((self.base.rect.x + self.state.cursor_column() - 1, self.base.rect.y))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn typed(s: &mut TextBoxState, text: &str, w: usize) {
        for c in text.chars() {
            s.handle_key(KeyCode::Char(c), w);
        }
    }

    #[test]
    fn typing_and_backspace() {
        let mut s = TextBoxState::default();
        typed(&mut s, "ab", 10);
        assert_eq!((s.text().as_str(), s.cursor()), ("ab", 2));
        let mut s = TextBoxState::new("abc");
        assert_eq!(s.handle_key(KeyCode::Backspace, 10), Edit::Changed);
        assert_eq!((s.text().as_str(), s.cursor()), ("ab", 2));
    }

    #[test]
    fn view_scrolls_with_cursor() {
        let mut s = TextBoxState::default();
        typed(&mut s, "abcdefgh", 5);
        assert_eq!(s.view_offset(), 4);
        assert_eq!(s.cursor_column(), 5);
        s.handle_key(KeyCode::Home, 5);
        assert_eq!((s.cursor(), s.view_offset()), (0, 0));
    }

    #[test]
    fn click_maps_to_index() {
        let mut s = TextBoxState::new("hello");
        s.click(3, 10);
        assert_eq!(s.cursor(), 2);
        s.click(9, 10);
        assert_eq!(s.cursor(), 5);
    }
}
