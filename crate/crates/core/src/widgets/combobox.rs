use crate::backend::{InputEvent, KeyCode, MouseKind};
use crate::events::{ClickVerdict, ModalCx, ModalInput, ModalOutcome};
use crate::geometry::Rect;
use crate::nav::popup_open;
use crate::render::{fixed_width, BorderStyle, FrameBuffer};

use super::{item_at_row, theme, widget_boilerplate, ListBoxState, Response, Widget, WidgetBase};

const MAX_POPUP_ROWS: usize = 8;

/// One-line field that drops down a list to pick from.
pub struct ComboBox {
    base: WidgetBase,
    list: ListBoxState,
}

impl ComboBox {
    pub fn new(x: i32, y: i32, width: i32, items: &[&str]) -> ComboBox {
        let mut list = ListBoxState::new(items);
        list.select(Some(0), MAX_POPUP_ROWS);
        ComboBox { base: WidgetBase::new(Rect::new(x, y, width.max(5), 1), true), list }
    }

    pub fn selected(&self) -> Option<usize> {
        self.list.selected()
    }

    pub fn selected_text(&self) -> Option<&str> {
        self.list.selected().map(|i| self.list.items[i].as_str())
    }

    pub fn select(&mut self, idx: usize) -> bool {
        let before = self.list.selected();
        self.list.select(Some(idx), MAX_POPUP_ROWS);
        let changed = before != self.list.selected();
        if changed {
            self.base.invalidate();
        }
        changed
    }

    fn popup_rows(&self) -> usize {
        self.list.items.len().clamp(1, MAX_POPUP_ROWS)
    }

    /// Where the drop-down goes: below the field, or above if it would not fit.
    pub fn popup_rect(&self, screen: Rect) -> Rect {
        let r = self.base.rect;
        let h = self.popup_rows() as i32 + 2;
        let below = Rect::new(r.x, r.y + 1, r.w, h);
        if below.bottom() <= screen.bottom() || r.y - h < screen.y {
            below
        } else {
            Rect::new(r.x, r.y - h, r.w, h)
        }
    }

    fn draw_popup(&self, fb: &mut FrameBuffer, region: Rect, list: &ListBoxState) {
        let _ = fb.draw_border(region, BorderStyle::Single, theme::POPUP.fg, theme::POPUP.bg);
        let inner = region.inset(1);
        for row in 0..inner.h {
            let idx = list.scroll_top() + row as usize;
            let text = list.items.get(idx).map(String::as_str).unwrap_or("");
            let style = if list.selected() == Some(idx) { theme::POPUP_SELECTED } else { theme::POPUP };
            fb.put_str(inner.x, inner.y + row, &fixed_width(text, inner.w.max(0) as usize), style);
        }
    }
}

impl Widget for ComboBox {
    widget_boilerplate!("ComboBox");

    fn draw(&self, fb: &mut FrameBuffer, focused: bool) {
        let r = self.base.rect;
        let style = theme::focused(theme::FIELD, focused);
        let text = fixed_width(self.selected_text().unwrap_or(""), (r.w - 3).max(0) as usize);
        fb.put_str(r.x, r.y, &text, style);
        fb.put_str(r.right() - 2, r.y, "[v]", theme::BUTTON);
    }

    fn handle_key(&mut self, key: KeyCode) -> Response {
        match key {
            KeyCode::Enter | KeyCode::Space => Response::Modal,
            KeyCode::Up | KeyCode::Down => match self.list.target_for_key(key, MAX_POPUP_ROWS) {
                Some(t) if self.select(t) => Response::Changed,
                _ => Response::Handled,
            },
            _ => Response::Ignored,
        }
    }

    fn handle_mouse(&mut self, _x: i32, _y: i32, verdict: ClickVerdict) -> Response {
        if verdict.accepted() {
            Response::Modal
        } else {
            Response::Rejected
        }
    }

    fn run_modal(&mut self, cx: &mut ModalCx<'_>) -> ModalOutcome {
        let region = self.popup_rect(cx.fb.bounds());
        let snap = popup_open(cx.fb, region);
        let rows = region.h as usize - 2;
        let mut list = self.list.clone();
        let mut outcome = ModalOutcome::default();
        let mut chosen = None;
        loop {
            self.draw_popup(cx.fb, region, &list);
            let (ev, t) = match cx.next_input() {
                ModalInput::Event(ev, t) => (ev, t),
                ModalInput::Exhausted => break,
            };
            match ev {
                InputEvent::Key(KeyCode::Enter | KeyCode::Space) => {
                    chosen = list.selected();
                    break;
                }
                InputEvent::Key(KeyCode::Esc) => break,
                InputEvent::Key(k) => {
                    if let Some(target) = list.target_for_key(k, rows) {
                        list.select(Some(target), rows);
                    }
                }
                InputEvent::Mouse(m) if m.kind == MouseKind::Press => {
                    if region.contains(m.x, m.y) {
                        if cx.filter_click(t) == ClickVerdict::Reject {
                            continue;
                        }
                        let local_y = m.y - region.y + 1;
                        if let Some(i) = item_at_row(local_y, region.h, list.scroll_top(), true, list.items.len()) {
                            chosen = Some(i);
                            break;
                        }
                    } else {
                        if !self.base.rect.contains(m.x, m.y) {
                            outcome.reinject = Some(ev);
                        }
                        break;
                    }
                }
                _ => {}
            }
        }
        snap.restore(cx.fb);
        if let Some(i) = chosen {
            outcome.changed = self.select(i);
        }
        cx.redraw(region, Some(&*self));
        outcome
    }
}
