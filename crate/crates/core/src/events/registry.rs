//! Handler registry shared by every screen of an application.
//!
//! Screens add entries on setup and must remove all of them on teardown;
//! a leftover entry makes every later dispatch scan more.

use std::cell::RefCell;
use std::rc::Rc;
use std::sync::atomic::{AtomicU64, Ordering};

use crate::backend::{InputEvent, KeyCode};

use super::{Screen, WidgetId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ScreenId(pub u64);

impl ScreenId {
    pub(crate) fn fresh() -> ScreenId {
        static NEXT: AtomicU64 = AtomicU64::new(1);
        ScreenId(NEXT.fetch_add(1, Ordering::Relaxed))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EventKind {
    Click,
    Change,
    Activate,
    Key,
}

/// Handlers are plain functions; per-screen state lives in the [`Screen`].
pub type Handler = fn(&mut Screen, WidgetId, &InputEvent);

#[derive(Clone, Copy)]
pub struct HandlerRegistration {
    pub kind: EventKind,
    pub handler: Handler,
}

impl HandlerRegistration {
    pub fn new(kind: EventKind, handler: Handler) -> HandlerRegistration {
        HandlerRegistration { kind, handler }
    }

    pub fn click(handler: Handler) -> HandlerRegistration {
        HandlerRegistration::new(EventKind::Click, handler)
    }

    pub fn change(handler: Handler) -> HandlerRegistration {
        HandlerRegistration::new(EventKind::Change, handler)
    }

    pub fn activate(handler: Handler) -> HandlerRegistration {
        HandlerRegistration::new(EventKind::Activate, handler)
    }

    pub fn key(handler: Handler) -> HandlerRegistration {
        HandlerRegistration::new(EventKind::Key, handler)
    }
}

/// Screen-wide key bindings installed by attached components.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GlobalHook {
    MenuBar,
    CycleTabs,
    CycleWindows,
}

struct Entry {
    screen: ScreenId,
    widget: WidgetId,
    kind: EventKind,
    handler: Handler,
}

struct HookEntry {
    screen: ScreenId,
    key: KeyCode,
    hook: GlobalHook,
}

#[derive(Default)]
pub struct HandlerRegistry {
    entries: Vec<Entry>,
    hooks: Vec<HookEntry>,
    scanned: u64,
}

pub type Registry = Rc<RefCell<HandlerRegistry>>;

impl HandlerRegistry {
    pub fn new_shared() -> Registry {
        Rc::new(RefCell::new(HandlerRegistry::default()))
    }

    /// Handler entries plus global hooks.
    pub fn len(&self) -> usize {
        self.entries.len() + self.hooks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn hook_count(&self) -> usize {
        self.hooks.len()
    }

    /// Total entries examined by dispatch lookups so far.
    pub fn scanned(&self) -> u64 {
        self.scanned
    }

    pub fn reset_scanned(&mut self) {
        self.scanned = 0;
    }

    pub(crate) fn add(&mut self, screen: ScreenId, widget: WidgetId, reg: HandlerRegistration) {
        self.entries.push(Entry { screen, widget, kind: reg.kind, handler: reg.handler });
    }

    pub(crate) fn add_hook(&mut self, screen: ScreenId, key: KeyCode, hook: GlobalHook) {
        if !self.hooks.iter().any(|h| h.screen == screen && h.key == key) {
            self.hooks.push(HookEntry { screen, key, hook });
        }
    }

    pub(crate) fn remove_widget(&mut self, screen: ScreenId, widget: WidgetId) {
        self.entries.retain(|e| !(e.screen == screen && e.widget == widget));
    }

    pub(crate) fn remove_screen(&mut self, screen: ScreenId) {
        self.entries.retain(|e| e.screen != screen);
        self.hooks.retain(|h| h.screen != screen);
    }

    pub(crate) fn handlers_for(&mut self, screen: ScreenId, widget: WidgetId, kind: EventKind) -> Vec<Handler> {
        self.scanned += self.entries.len() as u64;
        self.entries
            .iter()
            .filter(|e| e.screen == screen && e.widget == widget && e.kind == kind)
            .map(|e| e.handler)
            .collect()
    }

    pub(crate) fn hook_for(&mut self, screen: ScreenId, key: KeyCode) -> Option<GlobalHook> {
        self.scanned += self.hooks.len() as u64;
        self.hooks.iter().find(|h| h.screen == screen && h.key == key).map(|h| h.hook)
    }

    pub(crate) fn count_for_screen(&self, screen: ScreenId) -> usize {
        self.entries.iter().filter(|e| e.screen == screen).count()
            + self.hooks.iter().filter(|h| h.screen == screen).count()
    }
}
