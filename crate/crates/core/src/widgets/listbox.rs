use crate::backend::KeyCode;
use crate::events::ClickVerdict;
use crate::geometry::Rect;
use crate::render::{fixed_width, BorderStyle, FrameBuffer};

use super::{theme, widget_boilerplate, Response, Widget, WidgetBase};

/// Item index under widget-local row `local_y` (1-based), or `None` for
/// border rows and rows past the last item.
pub fn item_at_row(local_y: i32, height: i32, scroll_top: usize, bordered: bool, len: usize) -> Option<usize> {
    let border = bordered as i32;
    if local_y < 1 + border || local_y > height - border {
        return None;
    }
    let idx = scroll_top + (local_y - 1 - border) as usize;
    (idx < len).then_some(idx)
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ListBoxState {
    pub items: Vec<String>,
    selected: Option<usize>,
    scroll_top: usize,
}

impl ListBoxState {
    pub fn new(items: &[&str]) -> ListBoxState {
        ListBoxState { items: items.iter().map(|s| s.to_string()).collect(), selected: None, scroll_top: 0 }
    }

    pub fn selected(&self) -> Option<usize> {
        self.selected
    }

    pub fn scroll_top(&self) -> usize {
        self.scroll_top
    }

    /// Selects `idx` (ignored when out of range) and scrolls it into a view
    /// of `rows` rows. Returns whether the view scrolled.
    pub fn select(&mut self, idx: Option<usize>, rows: usize) -> bool {
        self.selected = idx.filter(|&i| i < self.items.len());
        let before = self.scroll_top;
        if let Some(i) = self.selected {
            let rows = rows.max(1);
            if i < self.scroll_top {
                self.scroll_top = i;
            } else if i >= self.scroll_top + rows {
                self.scroll_top = i + 1 - rows;
            }
        }
        before != self.scroll_top
    }

    /// Selection after a navigation key, or `None` if the key does not navigate.
    pub fn target_for_key(&self, key: KeyCode, rows: usize) -> Option<usize> {
        if self.items.is_empty() {
            return None;
        }
        let last = self.items.len() - 1;
        let cur = self.selected;
        let page = rows.max(1);
        let t = match key {
            KeyCode::Up => cur.map_or(0, |c| c.saturating_sub(1)),
            KeyCode::Down => cur.map_or(0, |c| (c + 1).min(last)),
            KeyCode::Home => 0,
            KeyCode::End => last,
            KeyCode::KeyPgUp => cur.map_or(0, |c| c.saturating_sub(page)),
            KeyCode::KeyPgDown => cur.map_or(0, |c| (c + page).min(last)),
            _ => return None,
        };
        Some(t)
    }
}

/// Scrollable list with a single selection.
pub struct ListBox {
    base: WidgetBase,
    state: ListBoxState,
    bordered: bool,
}

impl ListBox {
    pub fn new(rect: Rect, items: &[&str]) -> ListBox {
        ListBox { base: WidgetBase::new(rect, true), state: ListBoxState::new(items), bordered: true }
    }

    pub fn borderless(mut self) -> ListBox {
        self.bordered = false;
        self
    }

    pub fn state(&self) -> &ListBoxState {
        &self.state
    }

    pub fn selected(&self) -> Option<usize> {
        self.state.selected
    }

    pub fn selected_text(&self) -> Option<&str> {
        self.state.selected.map(|i| self.state.items[i].as_str())
    }

    pub fn is_bordered(&self) -> bool {
        self.bordered
    }

    pub fn inner(&self) -> Rect {
        if self.bordered {
            self.base.rect.inset(1)
        } else {
            self.base.rect
        }
    }

    fn rows(&self) -> usize {
        self.inner().h.max(0) as usize
    }

    fn row_rect(&self, idx: usize) -> Rect {
        let i = self.inner();
        if idx < self.state.scroll_top || idx >= self.state.scroll_top + self.rows() {
            return Rect::EMPTY;
        }
        Rect::new(i.x, i.y + (idx - self.state.scroll_top) as i32, i.w, 1)
    }

    /// Changes the selection, marking only the affected rows for repaint.
    pub fn select(&mut self, idx: Option<usize>) -> bool {
        let old = self.state.selected;
        let rows = self.rows();
        if self.state.select(idx, rows) {
            self.base.invalidate_rect(self.inner());
        } else if old != self.state.selected {
            for i in [old, self.state.selected].into_iter().flatten() {
                let r = self.row_rect(i);
                self.base.invalidate_rect(r);
            }
        }
        old != self.state.selected
    }

    pub fn set_items(&mut self, items: &[&str]) {
        self.state = ListBoxState::new(items);
        self.base.invalidate();
    }
}

impl Widget for ListBox {
    widget_boilerplate!("ListBox");

    fn draw(&self, fb: &mut FrameBuffer, focused: bool) {
        let r = self.base.rect;
        if self.bordered {
            let frame = theme::focused(theme::FRAME, focused);
            let _ = fb.draw_border(r, BorderStyle::Single, frame.fg, frame.bg);
        }
        let inner = self.inner();
        fb.fill_rect(inner, ' ', theme::FRAME.fg, theme::FRAME.bg);
        for row in 0..inner.h.max(0) as usize {
            let idx = self.state.scroll_top + row;
            let Some(item) = self.state.items.get(idx) else { break };
            let style = if self.state.selected == Some(idx) {
                if focused {
                    theme::SELECTED_FOCUSED
                } else {
                    theme::SELECTED
                }
            } else {
                theme::FRAME
            };
            fb.put_str(inner.x, inner.y + row as i32, &fixed_width(item, inner.w.max(0) as usize), style);
        }
    }

    fn handle_key(&mut self, key: KeyCode) -> Response {
        match self.state.target_for_key(key, self.rows()) {
            Some(t) if self.select(Some(t)) => Response::Changed,
            Some(_) => Response::Handled,
            None => Response::Ignored,
        }
    }

    fn handle_mouse(&mut self, _x: i32, y: i32, _verdict: ClickVerdict) -> Response {
        let idx = item_at_row(y, self.base.rect.h, self.state.scroll_top, self.bordered, self.state.items.len());
        match idx {
            Some(i) if self.select(Some(i)) => Response::Changed,
            _ => Response::Handled,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_mapping_table() {
        // bordered, 7 rows tall (5 visible items), items A..E
        let table: [(i32, usize, Option<usize>); 8] = [
            (1, 0, None),
            (2, 0, Some(0)),
            (3, 0, Some(1)),
            (6, 0, Some(4)),
            (7, 0, None),
            (3, 3, Some(4)),
            (4, 3, None),
            (2, 3, Some(3)),
        ];
        for (y, top, want) in table {
            assert_eq!(item_at_row(y, 7, top, true, 5), want, "row {y} top {top}");
        }
        assert_eq!(item_at_row(1, 5, 0, false, 5), Some(0));
        assert_eq!(item_at_row(5, 5, 0, false, 5), Some(4));
    }

    #[test]
    fn key_navigation_clamps() {
        let s = ListBoxState::new(&["a", "b"]);
        assert_eq!(s.target_for_key(KeyCode::Down, 5), Some(0));
        let mut s = s;
        s.select(Some(1), 5);
        assert_eq!(s.target_for_key(KeyCode::Down, 5), Some(1));
        assert_eq!(s.target_for_key(KeyCode::Char('x'), 5), None);
    }
}
