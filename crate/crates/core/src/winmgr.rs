//! Overlapping windows on a desktop with a taskbar.
//!
//! [`Desktop::install`] adds the background and the taskbar to a screen;
//! [`add_window`] registers windows. Windows are ordinary top-level widgets
//! whose children are clipped to their interior; z-order is the screen's
//! draw order. Moves and resizes repaint only the union of the old and new
//! rects, restoring to normal size repaints everything.

use crate::events::{ClickVerdict, EventsError, Screen, WidgetId};
use crate::geometry::Rect;
use crate::render::{fixed_width, BorderStyle, FrameBuffer};
use crate::widgets::{theme, widget_boilerplate, Fill, Response, Widget, WidgetBase};

pub const MIN_WIDTH: i32 = 6;
pub const MIN_HEIGHT: i32 = 4;
const BUTTONS_W: i32 = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WindowState {
    Normal,
    Minimized,
    Maximized,
}

/// Part of a window hit by a press.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WindowHit {
    /// Title bar, with the grab offset from the window origin.
    Title { dx: i32, dy: i32 },
    Grip,
    Minimize,
    Maximize,
    Close,
}

pub struct Window {
    base: WidgetBase,
    title: String,
    state: WindowState,
    restore_rect: Rect,
    focused_child: Option<WidgetId>,
    active: bool,
}

impl Window {
    /// Sizes below 6×4 are raised to the minimum.
    pub fn new(rect: Rect, title: &str) -> Window {
        let rect = Rect::new(rect.x, rect.y, rect.w.max(MIN_WIDTH), rect.h.max(MIN_HEIGHT));
        Window {
            base: WidgetBase::new(rect, false),
            title: title.to_string(),
            state: WindowState::Normal,
            restore_rect: rect,
            focused_child: None,
            active: false,
        }
    }

    pub fn title(&self) -> &str {
        &self.title
    }

    pub fn state(&self) -> WindowState {
        self.state
    }

    pub fn restore_rect(&self) -> Rect {
        self.restore_rect
    }

    pub fn is_active(&self) -> bool {
        self.active
    }

    /// Rect minus the border and the title row.
    pub fn interior(&self) -> Rect {
        let r = self.base.rect;
        Rect::new(r.x + 1, r.y + 2, r.w - 2, r.h - 3)
    }

    /// Local column where the `[-][^][X]` buttons start, if they fit.
    fn buttons_x(&self) -> Option<i32> {
        let x = self.base.rect.w - BUTTONS_W;
        (x >= 2).then_some(x)
    }

    fn set_active(&mut self, active: bool) {
        if self.active != active {
            self.active = active;
            self.base.invalidate();
        }
    }
}

impl Widget for Window {
    widget_boilerplate!("Window");

    fn draw(&self, fb: &mut FrameBuffer, _focused: bool) {
        let r = self.base.rect;
        let border = if self.active { BorderStyle::Double } else { BorderStyle::Single };
        fb.fill_rect(r, ' ', theme::WINDOW.fg, theme::WINDOW.bg);
        let _ = fb.draw_border(r, border, theme::WINDOW.fg, theme::WINDOW.bg);
        let title_style = if self.active { theme::WINDOW_TITLE_ACTIVE } else { theme::WINDOW_TITLE_INACTIVE };
        let bar_w = r.w - 2;
        let text_w = match self.buttons_x() {
            Some(bx) => bx - 2,
            None => bar_w,
        };
        fb.hline(r.x + 1, r.y + 1, bar_w, ' ', title_style);
        fb.put_str(r.x + 1, r.y + 1, &fixed_width(&format!(" {}", self.title), text_w.max(0) as usize), title_style);
        if let Some(bx) = self.buttons_x() {
            let buttons = format!("[-][{}][X]", fb.glyphs().maximize());
            fb.put_str(r.x + bx - 1, r.y + 1, &buttons, title_style);
        }
    }

    fn handle_mouse(&mut self, x: i32, y: i32, verdict: ClickVerdict) -> Response {
        let (w, h) = (self.base.rect.w, self.base.rect.h);
        if x == w && y == h {
            return Response::Window(WindowHit::Grip);
        }
        if y == 2 {
            if let Some(bx) = self.buttons_x() {
                let rel = x - bx;
                if (0..BUTTONS_W).contains(&rel) {
                    if !verdict.accepted() {
                        return Response::Rejected;
                    }
                    let hit = [WindowHit::Minimize, WindowHit::Maximize, WindowHit::Close][(rel / 3) as usize];
                    return Response::Window(hit);
                }
            }
        }
        if y <= 2 {
            return Response::Window(WindowHit::Title { dx: x - 1, dy: y - 1 });
        }
        Response::Handled
    }

    fn client_rect(&self) -> Option<Rect> {
        Some(self.interior())
    }
}

/// Bottom-row strip with one entry per window.
pub struct Taskbar {
    base: WidgetBase,
    entries: Vec<(WidgetId, String)>,
    active: Option<WidgetId>,
}

impl Taskbar {
    fn new(rect: Rect) -> Taskbar {
        Taskbar { base: WidgetBase::new(rect, false), entries: Vec::new(), active: None }
    }

    pub fn entries(&self) -> Vec<&str> {
        self.entries.iter().map(|(_, t)| t.as_str()).collect()
    }

    fn entry_spans(&self) -> Vec<(WidgetId, i32, i32)> {
        let mut x = self.base.rect.x + 1;
        let mut out = Vec::new();
        for (id, t) in &self.entries {
            let w = t.chars().count() as i32 + 2;
            out.push((*id, x, x + w - 1));
            x += w + 1;
        }
        out
    }

    fn sync(&mut self, entries: Vec<(WidgetId, String)>, active: Option<WidgetId>) {
        if self.entries != entries || self.active != active {
            self.entries = entries;
            self.active = active;
            self.base.invalidate();
        }
    }
}

impl Widget for Taskbar {
    widget_boilerplate!("Taskbar");

    fn draw(&self, fb: &mut FrameBuffer, _focused: bool) {
        let r = self.base.rect;
        fb.fill_rect(r, ' ', theme::TASKBAR.fg, theme::TASKBAR.bg);
        for ((id, title), (_, x, _)) in self.entries.iter().zip(self.entry_spans()) {
            let style = if self.active == Some(*id) { theme::TASKBAR_ACTIVE } else { theme::TASKBAR };
            fb.put_str(x, r.y, &format!("[{title}]"), style);
        }
    }

    fn handle_mouse(&mut self, x: i32, _y: i32, verdict: ClickVerdict) -> Response {
        let sx = self.base.rect.x + x - 1;
        match self.entry_spans().into_iter().find(|&(_, a, b)| (a..=b).contains(&sx)) {
            Some(_) if !verdict.accepted() => Response::Rejected,
            Some((id, _, _)) => Response::Taskbar(id),
            None => Response::Handled,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DragMode {
    Moving,
    Resizing,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DragState {
    pub mode: DragMode,
    pub window: WidgetId,
    pub dx: i32,
    pub dy: i32,
}

/// Window bookkeeping stored in the screen.
#[derive(Debug, Clone)]
pub struct Desktop {
    windows: Vec<WidgetId>,
    taskbar: WidgetId,
    background: WidgetId,
    active: Option<WidgetId>,
    drag: Option<DragState>,
}

impl Desktop {
    /// Adds the desktop fill and the taskbar to `scr` and binds F12.
    pub fn install(scr: &mut Screen) -> Result<(), EventsError> {
        let b = scr.bounds();
        let background = scr.set_background(Fill::new(b, ' ', theme::DESKTOP))?;
        let taskbar = scr.register(Taskbar::new(b.row(b.bottom())), &[])?;
        scr.pin_to_front(taskbar);
        scr.set_desktop(Desktop { windows: Vec::new(), taskbar, background, active: None, drag: None });
        Ok(())
    }

    /// Windows in creation order.
    pub fn windows(&self) -> &[WidgetId] {
        &self.windows
    }

    pub fn active(&self) -> Option<WidgetId> {
        self.active
    }

    pub fn taskbar(&self) -> WidgetId {
        self.taskbar
    }

    pub fn drag(&self) -> Option<DragState> {
        self.drag
    }
}

/// Screen area windows live in: everything above the taskbar.
pub fn desktop_area(scr: &Screen) -> Rect {
    let b = scr.bounds();
    Rect::new(b.x, b.y, b.w, b.h - 1)
}

/// Registers a window and makes it active.
pub fn add_window(scr: &mut Screen, w: Window) -> Result<WidgetId, EventsError> {
    let id = scr.register(w, &[])?;
    if let Some(d) = scr.desktop_mut() {
        d.windows.push(id);
    }
    activate(scr, id);
    Ok(id)
}

fn window_state(scr: &Screen, id: WidgetId) -> Option<WindowState> {
    scr.widget::<Window>(id).map(|w| w.state)
}

fn sync_taskbar(scr: &mut Screen) {
    let Some(d) = scr.desktop() else { return };
    let (tb, active) = (d.taskbar, d.active);
    let entries: Vec<(WidgetId, String)> = d
        .windows
        .iter()
        .filter_map(|&w| scr.widget::<Window>(w).map(|win| (w, win.title.clone())))
        .collect();
    if let Some(t) = scr.widget_quiet::<Taskbar>(tb) {
        t.sync(entries, active);
    }
}

/// Raises `win`, gives it keyboard input and restores its last focused child.
pub fn activate(scr: &mut Screen, win: WidgetId) {
    let Some(old) = scr.desktop().map(|d| d.active) else { return };
    if window_state(scr, win).is_none_or(|s| s == WindowState::Minimized) {
        return;
    }
    scr.raise(win);
    if old != Some(win) {
        if let Some(o) = old {
            let f = scr.focus().filter(|&f| scr.is_descendant(f, o));
            if let Some(w) = scr.widget_quiet::<Window>(o) {
                w.focused_child = f.or(w.focused_child);
                w.set_active(false);
            }
        }
        if let Some(d) = scr.desktop_mut() {
            d.active = Some(win);
        }
        let remembered = scr.widget_quiet::<Window>(win).and_then(|w| {
            w.set_active(true);
            w.focused_child
        });
        scr.blur();
        match remembered.filter(|&c| scr.is_alive(c) && scr.is_shown(c)) {
            Some(c) => {
                scr.set_focus(c);
            }
            None => scr.ensure_focus(),
        }
    }
    if let Some(w) = scr.widget_dyn_mut(win) {
        w.base_mut().invalidate();
    }
    sync_taskbar(scr);
}

/// Activates the window that contains `hit`, if any.
pub(crate) fn raise_for(scr: &mut Screen, hit: WidgetId) {
    if scr.desktop().is_none() {
        return;
    }
    if let Some(win) = scr.enclosing(hit, "Window") {
        if scr.desktop().and_then(|d| d.active) != Some(win) || scr.roots().iter().rev().nth(1) != Some(&win) {
            activate(scr, win);
        }
    }
}

/// F12: activates the next non-minimized window in creation order.
pub fn cycle_windows(scr: &mut Screen) {
    let Some(d) = scr.desktop() else { return };
    let wins: Vec<WidgetId> =
        d.windows.iter().copied().filter(|&w| window_state(scr, w) != Some(WindowState::Minimized)).collect();
    if wins.is_empty() {
        return;
    }
    let next = match d.active.and_then(|a| wins.iter().position(|&w| w == a)) {
        Some(i) => wins[(i + 1) % wins.len()],
        None => wins[0],
    };
    activate(scr, next);
}

/// Clamps a window origin so its title bar stays inside the desktop area.
fn clamp_origin(area: Rect, w: i32, x: i32, y: i32) -> (i32, i32) {
    let max_x = (area.right() - w + 1).max(area.x);
    let max_y = (area.bottom() - 1).max(area.y);
    (x.clamp(area.x, max_x), y.clamp(area.y, max_y))
}

/// Moves a normal window. Returns the damaged area (old ∪ new).
pub fn wm_move(scr: &mut Screen, win: WidgetId, x: i32, y: i32) -> Rect {
    let Some(w) = scr.widget::<Window>(win) else { return Rect::EMPTY };
    if w.state != WindowState::Normal {
        return Rect::EMPTY;
    }
    let r = w.base.rect;
    let (x, y) = clamp_origin(desktop_area(scr), r.w, x, y);
    if (x, y) == (r.x, r.y) {
        return Rect::EMPTY;
    }
    let new = Rect::new(x, y, r.w, r.h);
    if let Some(w) = scr.widget_quiet::<Window>(win) {
        w.restore_rect = new;
    }
    scr.set_rect(win, new)
}

/// Resizes a normal window, clamped to the minimum size and the desktop.
pub fn wm_resize(scr: &mut Screen, win: WidgetId, w: i32, h: i32) -> Rect {
    let Some(window) = scr.widget::<Window>(win) else { return Rect::EMPTY };
    if window.state != WindowState::Normal {
        return Rect::EMPTY;
    }
    let r = window.base.rect;
    let area = desktop_area(scr);
    let w = w.min(area.right() - r.x + 1).max(MIN_WIDTH);
    let h = h.min(area.bottom() - r.y + 1).max(MIN_HEIGHT);
    if (w, h) == (r.w, r.h) {
        return Rect::EMPTY;
    }
    let new = Rect::new(r.x, r.y, w, h);
    if let Some(window) = scr.widget_quiet::<Window>(win) {
        window.restore_rect = new;
    }
    scr.set_rect(win, new)
}

fn topmost_visible(scr: &Screen) -> Option<WidgetId> {
    let d = scr.desktop()?;
    scr.roots()
        .iter()
        .rev()
        .copied()
        .find(|w| d.windows.contains(w) && window_state(scr, *w).is_some_and(|s| s != WindowState::Minimized))
}

pub fn wm_set_state(scr: &mut Screen, win: WidgetId, to: WindowState) {
    let Some(w) = scr.widget::<Window>(win) else { return };
    let from = w.state;
    let rect = w.base.rect;
    if from == to {
        return;
    }
    match to {
        WindowState::Maximized => {
            if let Some(w) = scr.widget_quiet::<Window>(win) {
                if from == WindowState::Normal {
                    w.restore_rect = rect;
                }
                w.state = WindowState::Maximized;
            }
            scr.set_visible(win, true);
            let area = desktop_area(scr);
            scr.set_rect(win, area);
            activate(scr, win);
        }
        WindowState::Minimized => {
            if let Some(w) = scr.widget_quiet::<Window>(win) {
                if from == WindowState::Normal {
                    w.restore_rect = rect;
                }
                w.state = WindowState::Minimized;
            }
            scr.set_visible(win, false);
            if scr.desktop().and_then(|d| d.active) == Some(win) {
                if let Some(d) = scr.desktop_mut() {
                    d.active = None;
                }
                if let Some(w) = scr.widget_quiet::<Window>(win) {
                    w.set_active(false);
                }
                scr.blur();
                match topmost_visible(scr) {
                    Some(next) => activate(scr, next),
                    None => scr.ensure_focus(),
                }
            }
            sync_taskbar(scr);
        }
        WindowState::Normal => {
            let restore = scr.widget::<Window>(win).map(|w| w.restore_rect).unwrap_or(rect);
            if let Some(w) = scr.widget_quiet::<Window>(win) {
                w.state = WindowState::Normal;
            }
            scr.set_visible(win, true);
            scr.set_rect(win, restore);
            activate(scr, win);
            scr.request_full_redraw();
        }
    }
}

/// Removes a window and its children.
pub fn close_window(scr: &mut Screen, win: WidgetId) {
    let was_active = scr.desktop().and_then(|d| d.active) == Some(win);
    scr.remove(win);
    if let Some(d) = scr.desktop_mut() {
        d.windows.retain(|&w| w != win);
        if d.drag.is_some_and(|g| g.window == win) {
            d.drag = None;
        }
        if was_active {
            d.active = None;
        }
    }
    if was_active {
        if let Some(next) = topmost_visible(scr) {
            activate(scr, next);
        }
    }
    sync_taskbar(scr);
}

/// Acts on a press on a window's chrome.
pub(crate) fn window_hit(scr: &mut Screen, win: WidgetId, hit: WindowHit) {
    let Some(state) = window_state(scr, win) else { return };
    match hit {
        WindowHit::Title { dx, dy } if state == WindowState::Normal => set_drag(scr, DragMode::Moving, win, dx, dy),
        WindowHit::Grip if state == WindowState::Normal => set_drag(scr, DragMode::Resizing, win, 0, 0),
        WindowHit::Title { .. } | WindowHit::Grip => {}
        WindowHit::Minimize => wm_set_state(scr, win, WindowState::Minimized),
        WindowHit::Maximize => {
            let to = if state == WindowState::Maximized { WindowState::Normal } else { WindowState::Maximized };
            wm_set_state(scr, win, to);
        }
        WindowHit::Close => close_window(scr, win),
    }
}

fn set_drag(scr: &mut Screen, mode: DragMode, window: WidgetId, dx: i32, dy: i32) {
    if let Some(d) = scr.desktop_mut() {
        d.drag = Some(DragState { mode, window, dx, dy });
    }
}

/// Completes a drag on mouse release.
pub(crate) fn finish_drag(scr: &mut Screen, x: i32, y: i32) {
    let Some(drag) = scr.desktop_mut().and_then(|d| d.drag.take()) else { return };
    let Some(r) = scr.widget::<Window>(drag.window).map(|w| w.base.rect) else { return };
    match drag.mode {
        DragMode::Moving => {
            wm_move(scr, drag.window, x - drag.dx, y - drag.dy);
        }
        DragMode::Resizing => {
            wm_resize(scr, drag.window, x - r.x + 1, y - r.y + 1);
        }
    }
}

/// Taskbar entry click: restores a minimized window, otherwise activates it.
pub(crate) fn taskbar_click(scr: &mut Screen, win: WidgetId) {
    match window_state(scr, win) {
        Some(WindowState::Minimized) => wm_set_state(scr, win, WindowState::Normal),
        Some(_) => activate(scr, win),
        None => {}
    }
}

/// Keeps the background, taskbar and maximized windows matched to the screen size.
pub(crate) fn screen_resized(scr: &mut Screen) {
    let Some(d) = scr.desktop() else { return };
    let (bg, tb, wins) = (d.background, d.taskbar, d.windows.clone());
    let b = scr.bounds();
    scr.set_rect(bg, b);
    scr.set_rect(tb, b.row(b.bottom()));
    let area = desktop_area(scr);
    for w in wins {
        if window_state(scr, w) == Some(WindowState::Maximized) {
            scr.set_rect(w, area);
        }
    }
}
