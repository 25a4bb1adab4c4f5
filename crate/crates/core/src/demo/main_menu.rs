use crate::backend::{InputEvent, KeyCode, TerminalSize};
use crate::events::{ClickVerdict, HandlerRegistration, Registry, Screen, WidgetId};
use crate::geometry::Rect;
use crate::render::{fixed_width, FrameBuffer};
use crate::widgets::{theme, widget_boilerplate, Label, Panel, Response, Widget, WidgetBase};

use super::{menu_lines, DemoError};

pub const MAIN_TITLE: &str = "TUI LIBRARY DEMO";
pub const PROMPT: &str = "Enter choice (1-9):";

/// Vertical list of numbered choices. Digit keys pick directly; ENTER,
/// SPACE or a click picks the highlighted one. Picking fires CLICK.
pub struct ChoiceList {
    base: WidgetBase,
    items: Vec<String>,
    selected: usize,
}

impl ChoiceList {
    pub fn new(x: i32, y: i32, width: i32, items: Vec<String>) -> ChoiceList {
        let h = items.len().max(1) as i32;
        ChoiceList { base: WidgetBase::new(Rect::new(x, y, width, h), true), items, selected: 0 }
    }

    pub fn selected(&self) -> usize {
        self.selected
    }

    fn row_rect(&self, i: usize) -> Rect {
        let r = self.base.rect;
        r.row(r.y + i as i32)
    }

    fn select(&mut self, i: usize) -> bool {
        if i >= self.items.len() || i == self.selected {
            return false;
        }
        self.base.invalidate_rect(self.row_rect(self.selected));
        self.base.invalidate_rect(self.row_rect(i));
        self.selected = i;
        true
    }
}

impl Widget for ChoiceList {
    widget_boilerplate!("ChoiceList");

    fn draw(&self, fb: &mut FrameBuffer, focused: bool) {
        let r = self.base.rect;
        for (i, item) in self.items.iter().enumerate() {
            let style = match (i == self.selected, focused) {
                (true, true) => theme::SELECTED_FOCUSED,
                (true, false) => theme::SELECTED,
                _ => theme::LABEL,
            };
            fb.put_str(r.x, r.y + i as i32, &fixed_width(item, r.w as usize), style);
        }
    }

    fn handle_key(&mut self, key: KeyCode) -> Response {
        match key {
            KeyCode::Up => {
                self.select(self.selected.saturating_sub(1));
                Response::Handled
            }
            KeyCode::Down => {
                self.select(self.selected + 1);
                Response::Handled
            }
            KeyCode::Home => {
                self.select(0);
                Response::Handled
            }
            KeyCode::End => {
                self.select(self.items.len().saturating_sub(1));
                Response::Handled
            }
            KeyCode::Enter | KeyCode::Space => Response::Clicked,
            KeyCode::Char(c) => match c.to_digit(10) {
                Some(d) if d >= 1 && (d as usize) <= self.items.len() => {
                    self.select(d as usize - 1);
                    Response::Clicked
                }
                _ => Response::Ignored,
            },
            _ => Response::Ignored,
        }
    }

    fn handle_mouse(&mut self, _x: i32, y: i32, verdict: ClickVerdict) -> Response {
        if !verdict.accepted() {
            return Response::Rejected;
        }
        let i = (y - 1) as usize;
        if i >= self.items.len() {
            return Response::Handled;
        }
        self.select(i);
        Response::Clicked
    }
}

fn launch(scr: &mut Screen, id: WidgetId, _ev: &InputEvent) {
    if let Some(list) = scr.widget::<ChoiceList>(id) {
        let n = list.selected() as i32 + 1;
        scr.request_exit(n);
    }
}

/// The main menu. Its loop ends with `Requested(n)` for choice `n`.
pub fn build_main_menu(registry: &Registry, size: TerminalSize) -> Result<Screen, DemoError> {
    let mut scr = Screen::new(registry, size);
    let cols = size.cols as i32;
    let box_w = 40.min(cols);
    let x = ((cols - box_w) / 2 + 1).max(1);
    let title_box = scr.register(Panel::new(Rect::new(x, 2, box_w, 3)), &[])?;
    let inner_w = (box_w - 2).max(0);
    let pad = ((inner_w - MAIN_TITLE.len() as i32) / 2).max(0) as usize;
    let centered = format!("{}{}", " ".repeat(pad), MAIN_TITLE);
    scr.register_child(title_box, Label::with_rect(Rect::new(1, 1, inner_w, 1), &centered), &[])?;
    let list = ChoiceList::new(x + 4, 6, box_w - 8, menu_lines());
    scr.register(list, &[HandlerRegistration::click(launch)])?;
    scr.register(Label::new(x + 4, 16, PROMPT), &[])?;
    let footer = "UP/DOWN: select   ENTER or 1-9: open   ESC: quit";
    scr.register(Label::new(2, size.rows as i32 - 1, footer), &[])?;
    Ok(scr)
}
