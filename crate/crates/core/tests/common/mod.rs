//! Shared rig for integration tests: a screen on a headless session,
//! driven through the library's own main loop one script at a time.
#![allow(dead_code)]

use cellui::backend::{GridSnapshot, InputEvent, KeyCode, MouseEvent, ScriptItem, Session, TerminalSize};
use cellui::demo::BuildFn;
use cellui::events::{parse_script, run, ExitReason, HandlerRegistry, Registry, Screen, WidgetId};
use cellui::render::{Cell, FrameBuffer};

pub const SIZE: TerminalSize = TerminalSize { cols: 80, rows: 24 };

/// Long enough that consecutive clicks are neither debounced nor doubled.
pub const CLICK_GAP_MS: u64 = 1000;

pub struct Rig {
    pub registry: Registry,
    pub scr: Screen,
    pub session: Session,
    pub fb: FrameBuffer,
}

impl Rig {
    pub fn new(build: BuildFn) -> Rig {
        Rig::with_registry(build, HandlerRegistry::new_shared(), SIZE)
    }

    pub fn with_registry(build: BuildFn, registry: Registry, size: TerminalSize) -> Rig {
        let scr = build(&registry, size).expect("demo builds");
        Rig::from_screen(registry, scr)
    }

    pub fn from_screen(registry: Registry, scr: Screen) -> Rig {
        let size = scr.size();
        let mut rig = Rig { registry, scr, session: Session::headless(size), fb: FrameBuffer::new(size) };
        rig.run();
        rig
    }

    /// Runs the main loop until the queued input is used up.
    pub fn run(&mut self) -> ExitReason {
        run(&mut self.scr, &mut self.session, &mut self.fb)
    }

    /// Queues `items`, runs them, and returns the number of cells flushed.
    pub fn feed(&mut self, items: Vec<ScriptItem>) -> usize {
        let before = self.cells_presented();
        self.session.headless_mut().expect("headless").push_script(items);
        self.run();
        self.cells_presented() - before
    }

    pub fn script(&mut self, text: &str) -> usize {
        self.feed(parse_script(text).expect("valid script"))
    }

    pub fn event(&mut self, ev: InputEvent) -> usize {
        self.feed(vec![ScriptItem::Event(ev)])
    }

    pub fn key(&mut self, k: KeyCode) -> usize {
        self.event(InputEvent::Key(k))
    }

    /// Press and release at `(x, y)` after a pause.
    pub fn click(&mut self, x: i32, y: i32) -> usize {
        self.feed(click_items(x, y))
    }

    /// Press at `(x, y)`, release at `(x2, y2)`.
    pub fn drag(&mut self, x: i32, y: i32, x2: i32, y2: i32) -> usize {
        self.feed(vec![
            ScriptItem::Wait(CLICK_GAP_MS),
            ScriptItem::Event(InputEvent::Mouse(MouseEvent::press(x, y))),
            ScriptItem::Event(InputEvent::Mouse(MouseEvent::release(x2, y2))),
        ])
    }

    pub fn cells_presented(&self) -> usize {
        self.session.headless_ref().expect("headless").cells_presented()
    }

    pub fn snap(&self) -> GridSnapshot {
        self.session.headless_ref().expect("headless").snapshot()
    }

    pub fn take_snaps(&mut self) -> Vec<(String, GridSnapshot)> {
        self.session.headless_mut().expect("headless").take_snaps()
    }

    /// The whole screen painted from scratch into a fresh buffer.
    pub fn from_scratch(&mut self) -> Vec<Cell> {
        let mut fresh = FrameBuffer::new(self.fb.size());
        fresh.set_glyphs(self.fb.glyphs());
        self.scr.draw_all(&mut fresh);
        fresh.back_cells().to_vec()
    }

    /// Widgets of `kind` in draw order.
    pub fn widgets_of(&self, kind: &str) -> Vec<WidgetId> {
        self.scr
            .draw_order()
            .into_iter()
            .filter(|&id| self.scr.widget_dyn(id).is_some_and(|w| w.kind() == kind))
            .collect()
    }

    pub fn kind_of(&self, id: WidgetId) -> &'static str {
        self.scr.widget_dyn(id).map(|w| w.kind()).unwrap_or("")
    }
}

pub fn click_items(x: i32, y: i32) -> Vec<ScriptItem> {
    vec![
        ScriptItem::Wait(CLICK_GAP_MS),
        ScriptItem::Event(InputEvent::Mouse(MouseEvent::press(x, y))),
        ScriptItem::Event(InputEvent::Mouse(MouseEvent::release(x, y))),
    ]
}

/// Cells of `snap` that differ from `cells`, as (x, y) pairs.
pub fn mismatches(snap: &GridSnapshot, cells: &[Cell]) -> Vec<(i32, i32)> {
    let cols = snap.size().cols as usize;
    snap.cells()
        .iter()
        .zip(cells)
        .enumerate()
        .filter(|(_, (a, b))| a != b)
        .map(|(i, _)| ((i % cols) as i32 + 1, (i / cols) as i32 + 1))
        .collect()
}
