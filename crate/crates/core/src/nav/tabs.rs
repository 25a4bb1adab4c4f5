use crate::backend::KeyCode;
use crate::events::{ClickVerdict, GlobalHook, Screen, WidgetId};
use crate::geometry::Rect;
use crate::render::{BorderStyle, FrameBuffer};
use crate::widgets::{theme, widget_boilerplate, Response, Widget, WidgetBase};

/// Tab headers over a framed page area. Widgets are registered into pages
/// with [`Screen::register_in_page`]; only the active page's widgets are
/// drawn, hit-tested and focusable. F11 cycles pages.
pub struct TabControl {
    base: WidgetBase,
    titles: Vec<String>,
    active: usize,
}

impl TabControl {
    /// Panics if `titles` is empty.
    pub fn new(rect: Rect, titles: &[&str]) -> TabControl {
        assert!(!titles.is_empty(), "a tab control needs at least one page");
        TabControl {
            base: WidgetBase::new(rect, false),
            titles: titles.iter().map(|t| t.to_string()).collect(),
            active: 0,
        }
    }

    pub fn titles(&self) -> &[String] {
        &self.titles
    }

    pub fn active(&self) -> usize {
        self.active
    }

    pub fn page_count(&self) -> usize {
        self.titles.len()
    }

    fn header_x(&self, i: usize) -> i32 {
        self.base.rect.x + self.titles[..i].iter().map(|t| t.chars().count() as i32 + 3).sum::<i32>()
    }

    /// Page whose header covers widget-local column `lx`.
    pub fn header_at(&self, lx: i32) -> Option<usize> {
        let x = self.base.rect.x + lx - 1;
        (0..self.titles.len()).find(|&i| {
            let start = self.header_x(i);
            x >= start && x < start + self.titles[i].chars().count() as i32 + 2
        })
    }

    pub(crate) fn set_active(&mut self, page: usize) -> bool {
        if page >= self.titles.len() || page == self.active {
            return false;
        }
        self.active = page;
        self.base.invalidate();
        true
    }
}

impl Widget for TabControl {
    widget_boilerplate!("TabControl");

    fn draw(&self, fb: &mut FrameBuffer, _focused: bool) {
        let r = self.base.rect;
        fb.fill_rect(r, ' ', theme::FRAME.fg, theme::FRAME.bg);
        for (i, t) in self.titles.iter().enumerate() {
            let style = if i == self.active { theme::TAB_ACTIVE } else { theme::FRAME };
            fb.put_str(self.header_x(i), r.y, &format!(" {t} "), style);
        }
        let frame = Rect::new(r.x, r.y + 1, r.w, r.h - 1);
        let _ = fb.draw_border(frame, BorderStyle::Single, theme::FRAME.fg, theme::FRAME.bg);
    }

    fn handle_mouse(&mut self, x: i32, y: i32, _verdict: ClickVerdict) -> Response {
        if y != 1 {
            return Response::Handled;
        }
        match self.header_at(x) {
            Some(p) if p != self.active => Response::SwitchTab(p),
            _ => Response::Handled,
        }
    }

    fn client_rect(&self) -> Option<Rect> {
        let r = self.base.rect;
        Some(Rect::new(r.x + 1, r.y + 2, r.w - 2, r.h - 3))
    }

    fn active_page(&self) -> Option<usize> {
        Some(self.active)
    }

    fn hooks(&self) -> Vec<(KeyCode, GlobalHook)> {
        vec![(KeyCode::F(11), GlobalHook::CycleTabs)]
    }
}

/// Makes `page` active: the page area is repainted and focus moves to the
/// first focusable widget of the new page if it was on the old one.
pub fn switch_tab(scr: &mut Screen, tabs: WidgetId, page: usize) {
    let changed = scr.widget_quiet::<TabControl>(tabs).is_some_and(|t| t.set_active(page));
    if !changed {
        return;
    }
    let had_focus = scr.focus().is_none_or(|f| scr.is_descendant(f, tabs));
    if had_focus {
        scr.blur();
        let first = scr.focus_ring().into_iter().find(|&w| scr.is_descendant(w, tabs));
        match first {
            Some(w) => {
                scr.set_focus(w);
            }
            None => scr.ensure_focus(),
        }
    }
}

/// F11: the next page of the tab control holding focus, or of the first
/// shown tab control.
pub fn cycle_tabs(scr: &mut Screen) {
    let target = scr
        .focus()
        .and_then(|f| scr.enclosing(f, "TabControl"))
        .or_else(|| {
            scr.draw_order()
                .into_iter()
                .find(|&id| scr.is_shown(id) && scr.widget::<TabControl>(id).is_some())
        });
    let Some(tabs) = target else { return };
    let Some(t) = scr.widget::<TabControl>(tabs) else { return };
    let next = (t.active() + 1) % t.page_count();
    switch_tab(scr, tabs, next);
}
