use crate::backend::KeyCode;
use crate::events::ClickVerdict;
use crate::geometry::Rect;
use crate::render::{BorderStyle, FrameBuffer};

use super::{theme, widget_boilerplate, Edit, Response, Widget, WidgetBase};

/// Multi-line edit buffer. There is always at least one (possibly empty) line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EditBoxState {
    lines: Vec<Vec<char>>,
    cur_line: usize,
    cur_col: usize,
    scroll_top: usize,
    col_offset: usize,
}

impl Default for EditBoxState {
    fn default() -> EditBoxState {
        EditBoxState { lines: vec![Vec::new()], cur_line: 0, cur_col: 0, scroll_top: 0, col_offset: 0 }
    }
}

/// Which rows of the view a key touched.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EditDamage {
    None,
    /// One buffer line.
    Line(usize),
    /// Everything from this buffer line to the bottom of the view.
    From(usize),
    All,
}

impl EditBoxState {
    pub fn new(text: &str) -> EditBoxState {
        let lines: Vec<Vec<char>> = text.split('\n').map(|l| l.chars().collect()).collect();
        EditBoxState { lines, ..EditBoxState::default() }
    }

    pub fn lines(&self) -> Vec<String> {
        self.lines.iter().map(|l| l.iter().collect()).collect()
    }

    pub fn text(&self) -> String {
        self.lines().join("\n")
    }

    pub fn cursor(&self) -> (usize, usize) {
        (self.cur_line, self.cur_col)
    }

    pub fn scroll_top(&self) -> usize {
        self.scroll_top
    }

    pub fn col_offset(&self) -> usize {
        self.col_offset
    }

    /// Places the cursor, clamping to the buffer.
    pub fn set_cursor(&mut self, line: usize, col: usize) {
        self.cur_line = line.min(self.lines.len() - 1);
        self.cur_col = col.min(self.lines[self.cur_line].len());
    }

    fn scroll(&mut self, width: usize, height: usize) -> bool {
        let (w, h) = (width.max(1), height.max(1));
        let before = (self.scroll_top, self.col_offset);
        if self.cur_line < self.scroll_top {
            self.scroll_top = self.cur_line;
        } else if self.cur_line >= self.scroll_top + h {
            self.scroll_top = self.cur_line + 1 - h;
        }
        if self.cur_col < self.col_offset {
            self.col_offset = self.cur_col;
        } else if self.cur_col > self.col_offset + w - 1 {
            self.col_offset = self.cur_col + 1 - w;
        }
        before != (self.scroll_top, self.col_offset)
    }

    /// Applies a key for a view of `width` × `height` cells.
    pub fn handle_key(&mut self, key: KeyCode, width: usize, height: usize) -> (Edit, EditDamage) {
        let line = self.cur_line;
        let (edit, damage) = match key {
            KeyCode::Enter => {
                let rest = self.lines[line].split_off(self.cur_col);
                self.lines.insert(line + 1, rest);
                self.cur_line += 1;
                self.cur_col = 0;
                (Edit::Changed, EditDamage::From(line))
            }
            KeyCode::Up | KeyCode::Down => {
                let target = if key == KeyCode::Up { line.checked_sub(1) } else { Some(line + 1) };
                match target.filter(|&t| t < self.lines.len()) {
                    Some(t) => {
                        self.cur_line = t;
                        self.cur_col = self.cur_col.min(self.lines[t].len());
                    }
                    None => return (Edit::Unchanged, EditDamage::None),
                }
                (Edit::Unchanged, EditDamage::None)
            }
            KeyCode::Left => {
                if self.cur_col > 0 {
                    self.cur_col -= 1;
                } else if line > 0 {
                    self.cur_line -= 1;
                    self.cur_col = self.lines[self.cur_line].len();
                }
                (Edit::Unchanged, EditDamage::None)
            }
            KeyCode::Right => {
                if self.cur_col < self.lines[line].len() {
                    self.cur_col += 1;
                } else if line + 1 < self.lines.len() {
                    self.cur_line += 1;
                    self.cur_col = 0;
                }
                (Edit::Unchanged, EditDamage::None)
            }
            KeyCode::Home => {
                self.cur_col = 0;
                (Edit::Unchanged, EditDamage::None)
            }
            KeyCode::End => {
                self.cur_col = self.lines[line].len();
                (Edit::Unchanged, EditDamage::None)
            }
            KeyCode::Backspace => {
                if self.cur_col > 0 {
                    self.cur_col -= 1;
                    self.lines[line].remove(self.cur_col);
                    (Edit::Changed, EditDamage::Line(line))
                } else if line > 0 {
                    let tail = self.lines.remove(line);
                    self.cur_line -= 1;
                    self.cur_col = self.lines[self.cur_line].len();
                    self.lines[self.cur_line].extend(tail);
                    (Edit::Changed, EditDamage::From(line - 1))
                } else {
                    (Edit::Unchanged, EditDamage::None)
                }
            }
            KeyCode::Delete => {
                if self.cur_col < self.lines[line].len() {
                    self.lines[line].remove(self.cur_col);
                    (Edit::Changed, EditDamage::Line(line))
                } else if line + 1 < self.lines.len() {
                    let tail = self.lines.remove(line + 1);
                    self.lines[line].extend(tail);
                    (Edit::Changed, EditDamage::From(line))
                } else {
                    (Edit::Unchanged, EditDamage::None)
                }
            }
            k => match k.typed_char().filter(|c| !c.is_control()) {
                Some(c) => {
                    self.lines[line].insert(self.cur_col, c);
                    self.cur_col += 1;
                    (Edit::Changed, EditDamage::Line(line))
                }
                None => (Edit::Unchanged, EditDamage::None),
            },
        };
        if self.scroll(width, height) {
            return (edit, EditDamage::All);
        }
        (edit, damage)
    }

    /// Places the cursor under a click at 1-based view cell `(col, row)`.
    pub fn click(&mut self, col: i32, row: i32, width: usize, height: usize) {
        let line = self.scroll_top + (row.max(1) - 1) as usize;
        let col = self.col_offset + (col.max(1) - 1) as usize;
        self.set_cursor(line, col);
        self.scroll(width, height);
    }
}

/// Bordered multi-line text input.
pub struct EditBox {
    base: WidgetBase,
    state: EditBoxState,
}

impl EditBox {
    pub fn new(rect: Rect) -> EditBox {
        EditBox { base: WidgetBase::new(rect, true), state: EditBoxState::default() }
    }

    fn inner(&self) -> Rect {
        self.base.rect.inset(1)
    }

    fn view(&self) -> (usize, usize) {
        let i = self.inner();
        (i.w.max(1) as usize, i.h.max(1) as usize)
    }

    pub fn state(&self) -> &EditBoxState {
        &self.state
    }

    pub fn text(&self) -> String {
        self.state.text()
    }

    pub fn set_text(&mut self, text: &str) {
        self.state = EditBoxState::new(text);
        self.base.invalidate();
    }

    fn row_rect(&self, line: usize) -> Rect {
        let i = self.inner();
        if line < self.state.scroll_top {
            return Rect::EMPTY;
        }
        let y = i.y + (line - self.state.scroll_top) as i32;
        if y > i.bottom() {
            return Rect::EMPTY;
        }
        Rect::new(i.x, y, i.w, 1)
    }
}

impl Widget for EditBox {
    widget_boilerplate!("EditBox");

    fn draw(&self, fb: &mut FrameBuffer, focused: bool) {
        let r = self.base.rect;
        let frame = theme::focused(theme::FRAME, focused);
        let _ = fb.draw_border(r, BorderStyle::Single, frame.fg, frame.bg);
        let inner = self.inner();
        fb.fill_rect(inner, ' ', theme::FIELD.fg, theme::FIELD.bg);
        for (row, line) in self.state.lines.iter().skip(self.state.scroll_top).take(inner.h.max(0) as usize).enumerate() {
            let text: String = line.iter().skip(self.state.col_offset).take(inner.w.max(0) as usize).collect();
            fb.put_str(inner.x, inner.y + row as i32, &text, theme::FIELD);
        }
    }

    fn handle_key(&mut self, key: KeyCode) -> Response {
        let (w, h) = self.view();
        let (edit, damage) = self.state.handle_key(key, w, h);
        match damage {
            EditDamage::None => {}
            EditDamage::Line(l) => {
                let r = self.row_rect(l);
                self.base.invalidate_rect(r);
            }
            EditDamage::From(l) => {
                let i = self.inner();
                let top = self.row_rect(l);
                if !top.is_empty() {
                    self.base.invalidate_rect(Rect::from_corners(i.x, top.y, i.right(), i.bottom()));
                }
            }
            EditDamage::All => self.base.invalidate_rect(self.inner()),
        }
        if edit == Edit::Changed {
            return Response::Changed;
        }
        match key {
            KeyCode::Up | KeyCode::Down | KeyCode::Left | KeyCode::Right | KeyCode::Home | KeyCode::End => {
                Response::Handled
            }
            KeyCode::Enter | KeyCode::Backspace | KeyCode::Delete => Response::Handled,
            _ => Response::Ignored,
        }
    }

    fn handle_mouse(&mut self, x: i32, y: i32, _verdict: ClickVerdict) -> Response {
        let (w, h) = self.view();
        if x <= 1 || y <= 1 || x >= self.base.rect.w || y >= self.base.rect.h {
            return Response::Handled;
        }
        let before = (self.state.scroll_top, self.state.col_offset);
        self.state.click(x - 1, y - 1, w, h);
        if before != (self.state.scroll_top, self.state.col_offset) {
            self.base.invalidate_rect(self.inner());
        }
        Response::Handled
    }

    fn cursor(&self) -> Option<(i32, i32)> {
        let i = self.inner();
        let (line, col) = self.state.cursor();
        Some((i.x + (col - self.state.col_offset) as i32, i.y + (line - self.state.scroll_top) as i32))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enter_splits_line() {
        let mut s = EditBoxState::new("abcd");
        s.set_cursor(0, 2);
        assert_eq!(s.handle_key(KeyCode::Enter, 10, 5).0, Edit::Changed);
        assert_eq!(s.lines(), vec!["ab", "cd"]);
        assert_eq!(s.cursor(), (1, 0));
    }

    #[test]
    fn vertical_moves_clamp_column() {
        let mut s = EditBoxState::new("abcdef\nxy");
        assert_eq!(s.handle_key(KeyCode::Up, 10, 5).0, Edit::Unchanged);
        s.set_cursor(0, 5);
        s.handle_key(KeyCode::Down, 10, 5);
        assert_eq!(s.cursor(), (1, 2));
    }

    #[test]
    fn typing_damages_one_line() {
        let mut s = EditBoxState::new("ab\ncd");
        s.set_cursor(1, 1);
        assert_eq!(s.handle_key(KeyCode::Char('z'), 10, 5), (Edit::Changed, EditDamage::Line(1)));
        assert_eq!(s.handle_key(KeyCode::Enter, 10, 5), (Edit::Changed, EditDamage::From(1)));
    }

    #[test]
    fn unlimited_lines_scroll_the_view() {
        let mut s = EditBoxState::default();
        for _ in 0..50 {
            s.handle_key(KeyCode::Enter, 10, 3);
        }
        assert_eq!(s.lines().len(), 51);
        assert_eq!(s.scroll_top(), 48);
    }
}
