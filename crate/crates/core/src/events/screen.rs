use std::any::Any;
use std::rc::Rc;

use crate::backend::{InputEvent, KeyCode, TerminalSize};
use crate::geometry::Rect;
use crate::nav::MenuBar;
use crate::render::FrameBuffer;
use crate::widgets::Widget;
use crate::winmgr::Desktop;

use super::{
    ClickFilter, ClickVerdict, EventKind, EventsError, ExitReason, GlobalHook, HandlerRegistration,
    PendingQueue, Registry, ScreenId, WidgetId,
};

struct Node {
    widget: Option<Box<dyn Widget>>,
    parent: Option<WidgetId>,
    children: Vec<WidgetId>,
    page: Option<usize>,
    alive: bool,
}

/// A set of widgets drawn and driven together, plus the handler state
/// their callbacks share.
///
/// Draw order is a preorder walk: top-level widgets in registration order
/// (the background first, pinned widgets last), each followed by its
/// children. Later widgets are in front.
pub struct Screen {
    id: ScreenId,
    registry: Registry,
    size: TerminalSize,
    nodes: Vec<Node>,
    roots: Vec<WidgetId>,
    focus: Option<WidgetId>,
    background: Option<WidgetId>,
    menubar: Option<MenuBar>,
    menubar_attached: bool,
    desktop: Option<Desktop>,
    state: Option<Box<dyn Any>>,
    clicks: ClickFilter,
    exit: Option<ExitReason>,
    full_redraw: bool,
    screen_damage: Vec<Rect>,
    pending: PendingQueue,
}

impl Screen {
    pub fn new(registry: &Registry, size: TerminalSize) -> Screen {
        Screen {
            id: ScreenId::fresh(),
            registry: Rc::clone(registry),
            size,
            nodes: Vec::new(),
            roots: Vec::new(),
            focus: None,
            background: None,
            menubar: None,
            menubar_attached: false,
            desktop: None,
            state: None,
            clicks: ClickFilter::default(),
            exit: None,
            full_redraw: true,
            screen_damage: Vec::new(),
            pending: PendingQueue::new(),
        }
    }

    pub fn id(&self) -> ScreenId {
        self.id
    }

    pub fn registry(&self) -> &Registry {
        &self.registry
    }

    pub fn size(&self) -> TerminalSize {
        self.size
    }

    pub fn bounds(&self) -> Rect {
        self.size.rect()
    }

    /// Registry entries (handlers and hooks) owned by this screen.
    pub fn handler_count(&self) -> usize {
        self.registry.borrow().count_for_screen(self.id)
    }

    pub fn set_click_filter(&mut self, filter: ClickFilter) {
        self.clicks = filter;
    }

    // ---- registration ------------------------------------------------

    pub fn register(&mut self, w: impl Widget, handlers: &[HandlerRegistration]) -> Result<WidgetId, EventsError> {
        self.register_boxed(None, None, Box::new(w), handlers)
    }

    /// Registers `w` inside a container; `w`'s rect is relative to the
    /// container's client area (1-based).
    pub fn register_child(
        &mut self,
        parent: WidgetId,
        w: impl Widget,
        handlers: &[HandlerRegistration],
    ) -> Result<WidgetId, EventsError> {
        self.register_boxed(Some(parent), None, Box::new(w), handlers)
    }

    /// Registers `w` on one page of a tab control.
    pub fn register_in_page(
        &mut self,
        tabs: WidgetId,
        page: usize,
        w: impl Widget,
        handlers: &[HandlerRegistration],
    ) -> Result<WidgetId, EventsError> {
        self.register_boxed(Some(tabs), Some(page), Box::new(w), handlers)
    }

    /// Registers the widget drawn first, behind everything else.
    pub fn set_background(&mut self, w: impl Widget) -> Result<WidgetId, EventsError> {
        let id = self.register_boxed(None, None, Box::new(w), &[])?;
        self.roots.retain(|&r| r != id);
        self.roots.insert(0, id);
        self.background = Some(id);
        Ok(id)
    }

    pub fn background(&self) -> Option<WidgetId> {
        self.background
    }

    pub fn register_boxed(
        &mut self,
        parent: Option<WidgetId>,
        page: Option<usize>,
        mut w: Box<dyn Widget>,
        handlers: &[HandlerRegistration],
    ) -> Result<WidgetId, EventsError> {
        if w.base().id.is_some() {
            return Err(EventsError::AlreadyRegistered);
        }
        if let Some(p) = parent {
            let node = self.node(p).ok_or(EventsError::UnknownWidget(p))?;
            let is_container = node.widget.as_ref().is_some_and(|pw| pw.client_rect().is_some());
            if !is_container {
                return Err(EventsError::NotAContainer(p));
            }
        }
        let id = WidgetId(self.nodes.len() as u32);
        w.base_mut().id = Some(id);
        for (key, hook) in w.hooks() {
            self.install_hook(key, hook);
        }
        if parent.is_some() {
            w.base_mut().anchor = Some(w.base().rect);
        }
        self.nodes.push(Node { widget: Some(w), parent, children: Vec::new(), page, alive: true });
        match parent {
            Some(p) => {
                self.nodes[p.0 as usize].children.push(id);
                self.layout_children(p);
            }
            None => {
                let pos = self.roots.iter().position(|&r| self.is_pinned(r)).unwrap_or(self.roots.len());
                self.roots.insert(pos, id);
            }
        }
        let mut reg = self.registry.borrow_mut();
        for h in handlers {
            reg.add(self.id, id, *h);
        }
        Ok(id)
    }

    /// Keeps a top-level widget after all others regardless of later
    /// registrations and raises.
    pub fn pin_to_front(&mut self, id: WidgetId) {
        if let Some(w) = self.widget_dyn_mut(id) {
            w.base_mut().pinned = true;
        }
        if self.roots.contains(&id) {
            self.roots.retain(|&r| r != id);
            self.roots.push(id);
        }
    }

    fn is_pinned(&self, id: WidgetId) -> bool {
        self.widget_dyn(id).is_some_and(|w| w.base().pinned)
    }

    /// Adds more handlers for an already registered widget.
    pub fn add_handlers(&mut self, id: WidgetId, handlers: &[HandlerRegistration]) {
        let mut reg = self.registry.borrow_mut();
        for h in handlers {
            reg.add(self.id, id, *h);
        }
    }

    pub(crate) fn install_hook(&mut self, key: KeyCode, hook: GlobalHook) {
        self.registry.borrow_mut().add_hook(self.id, key, hook);
    }

    /// Removes a widget, its children and their handlers.
    pub fn remove(&mut self, id: WidgetId) {
        if !self.is_alive(id) {
            return;
        }
        if let Some(w) = self.widget_dyn(id) {
            let r = w.base().visible_rect();
            self.damage(r);
        }
        self.remove_subtree(id);
        if let Some(p) = self.nodes[id.0 as usize].parent {
            self.nodes[p.0 as usize].children.retain(|&c| c != id);
        } else {
            self.roots.retain(|&r| r != id);
        }
        if self.background == Some(id) {
            self.background = None;
        }
        self.fix_focus();
    }

    fn remove_subtree(&mut self, id: WidgetId) {
        let children = std::mem::take(&mut self.nodes[id.0 as usize].children);
        for c in children {
            self.remove_subtree(c);
        }
        self.registry.borrow_mut().remove_widget(self.id, id);
        self.clicks.forget(id);
        if self.focus == Some(id) {
            self.focus = None;
        }
        let node = &mut self.nodes[id.0 as usize];
        node.alive = false;
        node.widget = None;
    }

    /// Unregisters everything: widgets, handlers and global hooks. The
    /// registry returns to its size before this screen was set up.
    pub fn teardown(&mut self) {
        self.registry.borrow_mut().remove_screen(self.id);
        self.nodes.clear();
        self.roots.clear();
        self.focus = None;
        self.background = None;
        self.menubar = None;
        self.menubar_attached = false;
        self.desktop = None;
        self.state = None;
        self.pending.clear();
        self.screen_damage.clear();
        self.clicks = ClickFilter::new(self.clicks.threshold_ms(), self.clicks.dclick_ms());
    }

    // ---- attachments --------------------------------------------------

    /// Attaches a menu bar drawn on the top row; F10 opens it.
    pub fn attach_menubar(&mut self, mb: MenuBar) {
        self.menubar = Some(mb);
        self.menubar_attached = true;
        self.install_hook(KeyCode::F(10), GlobalHook::MenuBar);
        self.damage(self.bounds().row(1));
    }

    pub fn menubar(&self) -> Option<&MenuBar> {
        self.menubar.as_ref()
    }

    pub fn menubar_mut(&mut self) -> Option<&mut MenuBar> {
        self.menubar.as_mut()
    }

    pub(crate) fn take_menubar(&mut self) -> Option<MenuBar> {
        self.menubar.take()
    }

    pub(crate) fn put_menubar(&mut self, mb: MenuBar) {
        self.menubar = Some(mb);
    }

    pub(crate) fn menubar_hit(&self, _x: i32, y: i32) -> bool {
        self.menubar.is_some() && y == 1
    }

    pub fn desktop(&self) -> Option<&Desktop> {
        self.desktop.as_ref()
    }

    pub fn desktop_mut(&mut self) -> Option<&mut Desktop> {
        self.desktop.as_mut()
    }

    pub(crate) fn set_desktop(&mut self, d: Desktop) {
        self.desktop = Some(d);
        self.install_hook(KeyCode::F(12), GlobalHook::CycleWindows);
    }

    /// Stores the state handlers share; replaces any previous value.
    pub fn set_state<T: Any>(&mut self, state: T) {
        self.state = Some(Box::new(state));
    }

    pub fn state<T: Any>(&self) -> Option<&T> {
        self.state.as_ref().and_then(|s| s.downcast_ref())
    }

    pub fn state_mut<T: Any>(&mut self) -> Option<&mut T> {
        self.state.as_mut().and_then(|s| s.downcast_mut())
    }

    // ---- widget access ------------------------------------------------

    fn node(&self, id: WidgetId) -> Option<&Node> {
        self.nodes.get(id.0 as usize).filter(|n| n.alive)
    }

    pub fn is_alive(&self, id: WidgetId) -> bool {
        self.node(id).is_some()
    }

    pub fn widget_dyn(&self, id: WidgetId) -> Option<&dyn Widget> {
        self.node(id).and_then(|n| n.widget.as_deref())
    }

    pub fn widget_dyn_mut(&mut self, id: WidgetId) -> Option<&mut (dyn Widget + 'static)> {
        self.nodes.get_mut(id.0 as usize).filter(|n| n.alive).and_then(|n| n.widget.as_deref_mut())
    }

    pub fn widget<T: Widget>(&self, id: WidgetId) -> Option<&T> {
        self.widget_dyn(id).and_then(|w| w.as_any().downcast_ref())
    }

    /// Mutable access for handlers; the widget is marked for repaint.
    pub fn widget_mut<T: Widget>(&mut self, id: WidgetId) -> Option<&mut T> {
        let w = self.widget_dyn_mut(id)?;
        w.base_mut().invalidate();
        w.as_any_mut().downcast_mut()
    }

    /// Mutable access without marking anything dirty.
    pub(crate) fn widget_quiet<T: Widget>(&mut self, id: WidgetId) -> Option<&mut T> {
        self.widget_dyn_mut(id).and_then(|w| w.as_any_mut().downcast_mut())
    }

    pub(crate) fn with_widget<R>(&mut self, id: WidgetId, f: impl FnOnce(&mut dyn Widget) -> R) -> Option<R> {
        self.widget_dyn_mut(id).map(f)
    }

    pub(crate) fn take_widget(&mut self, id: WidgetId) -> Option<Box<dyn Widget>> {
        self.nodes.get_mut(id.0 as usize).filter(|n| n.alive).and_then(|n| n.widget.take())
    }

    pub(crate) fn put_widget(&mut self, id: WidgetId, w: Box<dyn Widget>) {
        if let Some(n) = self.nodes.get_mut(id.0 as usize) {
            if n.alive {
                n.widget = Some(w);
            }
        }
    }

    pub fn parent(&self, id: WidgetId) -> Option<WidgetId> {
        self.node(id).and_then(|n| n.parent)
    }

    pub fn children(&self, id: WidgetId) -> &[WidgetId] {
        self.node(id).map(|n| n.children.as_slice()).unwrap_or(&[])
    }

    pub fn page_of(&self, id: WidgetId) -> Option<usize> {
        self.node(id).and_then(|n| n.page)
    }

    pub fn roots(&self) -> &[WidgetId] {
        &self.roots
    }

    /// Every live widget in draw order.
    pub fn draw_order(&self) -> Vec<WidgetId> {
        let mut out = Vec::with_capacity(self.nodes.len());
        for &r in &self.roots {
            self.preorder_into(r, &mut out);
        }
        out
    }

    fn preorder_into(&self, id: WidgetId, out: &mut Vec<WidgetId>) {
        let Some(n) = self.node(id) else { return };
        out.push(id);
        for &c in &n.children {
            self.preorder_into(c, out);
        }
    }

    /// Nearest ancestor (or `id` itself) whose kind is `kind`.
    pub fn enclosing(&self, id: WidgetId, kind: &str) -> Option<WidgetId> {
        let mut cur = Some(id);
        while let Some(c) = cur {
            if self.widget_dyn(c).is_some_and(|w| w.kind() == kind) {
                return Some(c);
            }
            cur = self.parent(c);
        }
        None
    }

    pub fn is_descendant(&self, id: WidgetId, ancestor: WidgetId) -> bool {
        let mut cur = Some(id);
        while let Some(c) = cur {
            if c == ancestor {
                return true;
            }
            cur = self.parent(c);
        }
        false
    }

    /// Top-level widget order; `id` moves to the front (below pinned widgets).
    pub(crate) fn raise(&mut self, id: WidgetId) {
        if !self.roots.contains(&id) || self.is_pinned(id) {
            return;
        }
        self.roots.retain(|&r| r != id);
        let pos = self.roots.iter().position(|&r| self.is_pinned(r)).unwrap_or(self.roots.len());
        self.roots.insert(pos, id);
    }

    /// Visible itself, inside visible ancestors, and on the active page of
    /// an enclosing tab control.
    pub fn is_shown(&self, id: WidgetId) -> bool {
        let Some(n) = self.node(id) else { return false };
        if let Some(w) = &n.widget {
            if !w.base().visible {
                return false;
            }
        }
        match n.parent {
            None => true,
            Some(p) => {
                if let Some(page) = n.page {
                    let active = self.widget_dyn(p).and_then(|pw| pw.active_page());
                    if active != Some(page) {
                        return false;
                    }
                }
                self.is_shown(p)
            }
        }
    }

    // ---- geometry -----------------------------------------------------

    /// Recomputes absolute rects and clips of everything inside `id`.
    pub(crate) fn layout_children(&mut self, id: WidgetId) {
        let Some(w) = self.widget_dyn(id) else { return };
        let Some(client) = w.client_rect() else { return };
        let clip = client.intersect(&w.base().visible_rect());
        let children = self.children(id).to_vec();
        for c in children {
            if let Some(cw) = self.widget_dyn_mut(c) {
                let base = cw.base_mut();
                if let Some(a) = base.anchor {
                    base.rect = a.translate(client.x - 1, client.y - 1);
                }
                base.parent_clip = Some(clip);
                base.invalidate();
            }
            self.layout_children(c);
        }
    }

    /// Moves or resizes a widget; the area it used to cover is repainted.
    pub fn set_rect(&mut self, id: WidgetId, r: Rect) -> Rect {
        let Some(w) = self.widget_dyn_mut(id) else { return Rect::EMPTY };
        let old = w.base().visible_rect();
        let base = w.base_mut();
        if base.anchor.is_some() {
            let shift = (r.x - base.rect.x, r.y - base.rect.y);
            base.anchor = base.anchor.map(|a| Rect::new(a.x + shift.0, a.y + shift.1, r.w, r.h));
        }
        base.rect = r;
        base.invalidate();
        let new = base.visible_rect();
        self.layout_children(id);
        self.damage(old);
        old.union_bounds(&new)
    }

    pub fn set_visible(&mut self, id: WidgetId, visible: bool) {
        let Some(w) = self.widget_dyn_mut(id) else { return };
        if w.base().visible == visible {
            return;
        }
        w.base_mut().visible = visible;
        let r = w.base().visible_rect();
        if visible {
            w.base_mut().invalidate();
        } else {
            self.damage(r);
            self.fix_focus();
        }
    }

    pub fn resize(&mut self, size: TerminalSize) {
        if size == self.size {
            return;
        }
        self.size = size;
        crate::winmgr::screen_resized(self);
        self.request_full_redraw();
    }

    // ---- focus --------------------------------------------------------

    pub fn focus(&self) -> Option<WidgetId> {
        self.focus
    }

    fn in_focus_scope(&self, id: WidgetId) -> bool {
        let Some(d) = &self.desktop else { return true };
        match self.enclosing(id, "Window") {
            None => true,
            Some(win) => d.active() == Some(win),
        }
    }

    /// Focusable, shown widgets in draw order, restricted to the active
    /// window when a desktop is attached.
    pub fn focus_ring(&self) -> Vec<WidgetId> {
        self.draw_order()
            .into_iter()
            .filter(|&id| {
                self.widget_dyn(id).is_some_and(|w| w.base().focusable)
                    && self.is_shown(id)
                    && self.in_focus_scope(id)
            })
            .collect()
    }

    /// Moves focus to `id`. Returns false if `id` cannot take focus.
    pub fn set_focus(&mut self, id: WidgetId) -> bool {
        let ok = self.widget_dyn(id).is_some_and(|w| w.base().focusable) && self.is_shown(id);
        if !ok {
            return false;
        }
        if self.focus == Some(id) {
            return true;
        }
        self.blur();
        self.focus = Some(id);
        if let Some(w) = self.widget_dyn_mut(id) {
            w.focus_changed(true);
            w.base_mut().invalidate();
        }
        self.fire(id, EventKind::Activate, &InputEvent::Tick);
        true
    }

    /// Removes focus from the focused widget, if any.
    pub fn blur(&mut self) {
        if let Some(old) = self.focus.take() {
            if let Some(w) = self.widget_dyn_mut(old) {
                w.focus_changed(false);
                w.base_mut().invalidate();
            }
        }
    }

    /// Cycles focus through [`focus_ring`](Self::focus_ring).
    pub fn focus_next(&mut self, direction: i32) -> Option<WidgetId> {
        let ring = self.focus_ring();
        if ring.is_empty() {
            return self.focus;
        }
        let n = ring.len() as i32;
        let next = match self.focus.and_then(|f| ring.iter().position(|&r| r == f)) {
            Some(i) => ring[(i as i32 + direction.signum()).rem_euclid(n) as usize],
            None if direction < 0 => ring[ring.len() - 1],
            None => ring[0],
        };
        self.set_focus(next);
        self.focus
    }

    /// Focuses the first focusable widget if nothing is focused.
    pub fn ensure_focus(&mut self) {
        if self.focus.is_none() {
            if let Some(&first) = self.focus_ring().first() {
                self.set_focus(first);
            }
        }
    }

    /// Drops focus from a widget that can no longer hold it.
    pub(crate) fn fix_focus(&mut self) {
        if let Some(f) = self.focus {
            if !self.is_shown(f) || !self.in_focus_scope(f) {
                self.blur();
            }
        }
        self.ensure_focus();
    }

    /// Hardware cursor requested by the focused widget.
    pub fn cursor(&self) -> Option<(i32, i32)> {
        let f = self.focus?;
        if !self.is_shown(f) {
            return None;
        }
        let w = self.widget_dyn(f)?;
        w.cursor().filter(|&(x, y)| w.base().visible_rect().contains(x, y))
    }

    // ---- mouse --------------------------------------------------------

    /// Topmost shown widget under `(x, y)`.
    pub fn hit_test(&self, x: i32, y: i32) -> Option<WidgetId> {
        self.draw_order().into_iter().rev().find(|&id| {
            self.is_shown(id) && self.widget_dyn(id).is_some_and(|w| w.base().visible_rect().contains(x, y))
        })
    }

    /// Hit-tests, focuses the target if it is focusable, and returns it
    /// with widget-local 1-based coordinates.
    pub fn route_mouse(&mut self, x: i32, y: i32) -> Option<(WidgetId, i32, i32)> {
        let id = self.hit_test(x, y)?;
        let (rect, focusable) = {
            let w = self.widget_dyn(id)?;
            (w.base().rect, w.base().focusable)
        };
        if focusable && self.in_focus_scope(id) {
            self.set_focus(id);
        }
        Some((id, x - rect.x + 1, y - rect.y + 1))
    }

    pub fn filter_click(&mut self, id: WidgetId, t_ms: u64) -> ClickVerdict {
        self.clicks.filter(id, t_ms)
    }

    // ---- dispatch -----------------------------------------------------

    /// Calls the handlers of `kind` registered for `id`.
    pub fn fire(&mut self, id: WidgetId, kind: EventKind, ev: &InputEvent) {
        let handlers = self.registry.borrow_mut().handlers_for(self.id, id, kind);
        for h in handlers {
            h(self, id, ev);
        }
    }

    /// Ends the running loop with [`ExitReason::Requested`].
    pub fn request_exit(&mut self, code: i32) {
        self.exit = Some(ExitReason::Requested(code));
    }

    pub(crate) fn request_exit_reason(&mut self, reason: ExitReason) {
        self.exit = Some(reason);
    }

    pub(crate) fn take_exit(&mut self) -> Option<ExitReason> {
        self.exit.take()
    }

    /// Queues an event to be processed before new input.
    pub fn post_event(&mut self, ev: InputEvent) {
        self.pending.push_back(ev);
    }

    pub(crate) fn pop_pending(&mut self) -> Option<InputEvent> {
        self.pending.pop_front()
    }

    // ---- drawing ------------------------------------------------------

    /// Marks a screen area for repaint on the next redraw.
    pub fn damage(&mut self, r: Rect) {
        let r = r.intersect(&self.bounds());
        if !r.is_empty() && !self.screen_damage.contains(&r) {
            self.screen_damage.push(r);
        }
    }

    pub fn request_full_redraw(&mut self) {
        self.full_redraw = true;
    }

    /// Repaints every shown widget intersecting `damaged`, back to front,
    /// clipped to `damaged`. Returns the number of widgets drawn.
    pub fn damage_redraw(&mut self, fb: &mut FrameBuffer, damaged: Rect) -> usize {
        self.damage_redraw_with(fb, damaged, None)
    }

    pub(crate) fn damage_redraw_with(
        &mut self,
        fb: &mut FrameBuffer,
        damaged: Rect,
        stand_in: Option<(WidgetId, &dyn Widget)>,
    ) -> usize {
        let r = damaged.intersect(&fb.bounds());
        if r.is_empty() {
            return 0;
        }
        if self.background.is_none_or(|b| !self.is_shown(b)) {
            let blank = crate::render::Cell::BLANK;
            fb.with_clip(r, |fb| fb.fill_rect(r, blank.glyph, blank.fg, blank.bg));
        }
        let mut count = 0;
        for id in self.draw_order() {
            if self.draw_one(fb, id, r, stand_in) {
                count += 1;
            }
        }
        if let Some(mb) = &self.menubar {
            let bar = mb.bar_rect(fb.size().cols as i32);
            if bar.intersects(&r) {
                fb.with_clip(r, |fb| mb.draw_bar(fb));
            }
        }
        count
    }

    fn draw_one(&self, fb: &mut FrameBuffer, id: WidgetId, clip: Rect, stand_in: Option<(WidgetId, &dyn Widget)>) -> bool {
        if !self.is_shown(id) {
            return false;
        }
        let w: &dyn Widget = match (self.widget_dyn(id), stand_in) {
            (Some(w), _) => w,
            (None, Some((sid, sw))) if sid == id => sw,
            _ => return false,
        };
        let area = w.base().visible_rect().intersect(&clip);
        if area.is_empty() {
            return false;
        }
        let focused = self.focus == Some(id);
        fb.with_clip(area, |fb| w.draw(fb, focused));
        true
    }

    /// Paints the whole screen from scratch.
    pub fn draw_all(&mut self, fb: &mut FrameBuffer) -> usize {
        for n in self.nodes.iter_mut().filter(|n| n.alive) {
            if let Some(w) = n.widget.as_mut() {
                w.base_mut().clear_damage();
            }
        }
        self.screen_damage.clear();
        self.full_redraw = false;
        self.damage_redraw(fb, fb.bounds())
    }

    /// Repaints pending screen damage and every dirty widget (plus the
    /// widgets in front of it that overlap its damage).
    pub fn redraw_dirty(&mut self, fb: &mut FrameBuffer) {
        if self.full_redraw {
            self.draw_all(fb);
            return;
        }
        for r in std::mem::take(&mut self.screen_damage) {
            self.damage_redraw(fb, r);
        }
        let order = self.draw_order();
        for (i, &id) in order.iter().enumerate() {
            let shown = self.is_shown(id);
            let Some(w) = self.widget_dyn_mut(id) else { continue };
            if !w.base().is_dirty() {
                continue;
            }
            let damage = w.base_mut().take_damage();
            if !shown {
                continue;
            }
            for r in damage {
                for &other in &order[i..] {
                    self.draw_one(fb, other, r, None);
                }
            }
        }
    }

    /// Number of widgets with pending damage.
    pub fn dirty_count(&self) -> usize {
        self.nodes
            .iter()
            .filter(|n| n.alive)
            .filter(|n| n.widget.as_ref().is_some_and(|w| w.base().is_dirty()))
            .count()
    }
}

impl Drop for Screen {
    fn drop(&mut self) {
        self.teardown();
    }
}
