//! In-memory terminal used by tests and script replay.

use std::collections::VecDeque;
use std::fmt::Write as _;

use super::{InputEvent, Run, TerminalSize};
use crate::render::Cell;

/// One step of a replay script as the headless terminal consumes it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScriptItem {
    Event(InputEvent),
    /// Advances the virtual clock.
    Wait(u64),
    /// Records the current grid under a name.
    Snap(String),
}

/// Deep copy of a headless grid plus the cursor state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridSnapshot {
    size: TerminalSize,
    cells: Vec<Cell>,
    cursor: Option<(i32, i32)>,
}

impl GridSnapshot {
    pub fn size(&self) -> TerminalSize {
        self.size
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn cursor(&self) -> Option<(i32, i32)> {
        self.cursor
    }

    /// Cell at 1-based `(x, y)`; panics outside the grid.
    pub fn cell(&self, x: i32, y: i32) -> Cell {
        assert!(x >= 1 && y >= 1 && x <= self.size.cols as i32 && y <= self.size.rows as i32);
        self.cells[(y as usize - 1) * self.size.cols as usize + (x as usize - 1)]
    }

    pub fn row_text(&self, y: i32) -> String {
        (1..=self.size.cols as i32).map(|x| self.cell(x, y).glyph).collect()
    }

    /// Glyph grid, one line per row.
    pub fn text(&self) -> String {
        let mut s = String::new();
        for y in 1..=self.size.rows as i32 {
            s.push_str(&self.row_text(y));
            s.push('\n');
        }
        s
    }

    /// Two hex digits (fg, bg) per cell, one line per row.
    pub fn color_map(&self) -> String {
        let mut s = String::new();
        for y in 1..=self.size.rows as i32 {
            for x in 1..=self.size.cols as i32 {
                let c = self.cell(x, y);
                let _ = write!(s, "{:X}{:X}", c.fg.code(), c.bg.code());
            }
            s.push('\n');
        }
        s
    }

    /// Whether `needle` occurs anywhere on a single row.
    pub fn contains(&self, needle: &str) -> bool {
        (1..=self.size.rows as i32).any(|y| self.row_text(y).contains(needle))
    }

    /// First `(x, y)` where `needle` starts.
    pub fn find(&self, needle: &str) -> Option<(i32, i32)> {
        for y in 1..=self.size.rows as i32 {
            let row: Vec<char> = self.row_text(y).chars().collect();
            let pat: Vec<char> = needle.chars().collect();
            if pat.is_empty() || pat.len() > row.len() {
                continue;
            }
            for x in 0..=(row.len() - pat.len()) {
                if row[x..x + pat.len()] == pat[..] {
                    return Some((x as i32 + 1, y));
                }
            }
        }
        None
    }

    /// Number of cells that differ from `other` (same size assumed).
    pub fn diff_count(&self, other: &GridSnapshot) -> usize {
        self.cells.iter().zip(&other.cells).filter(|(a, b)| a != b).count()
    }
}

pub struct HeadlessTerminal {
    size: TerminalSize,
    grid: Vec<Cell>,
    cursor: Option<(i32, i32)>,
    queue: VecDeque<ScriptItem>,
    clock_ms: u64,
    snaps: Vec<(String, GridSnapshot)>,
    presents: usize,
    cells_presented: usize,
}

impl HeadlessTerminal {
    pub fn new(size: TerminalSize) -> HeadlessTerminal {
        HeadlessTerminal {
            size,
            grid: vec![Cell::BLANK; size.cell_count()],
            cursor: None,
            queue: VecDeque::new(),
            clock_ms: 0,
            snaps: Vec::new(),
            presents: 0,
            cells_presented: 0,
        }
    }

    pub fn size(&self) -> TerminalSize {
        self.size
    }

    pub fn push_event(&mut self, ev: InputEvent) {
        self.queue.push_back(ScriptItem::Event(ev));
    }

    pub fn push_script<I: IntoIterator<Item = ScriptItem>>(&mut self, items: I) {
        self.queue.extend(items);
    }

    pub fn advance_clock(&mut self, ms: u64) {
        self.clock_ms += ms;
    }

    pub fn now_ms(&self) -> u64 {
        self.clock_ms
    }

    pub fn input_exhausted(&self) -> bool {
        self.queue.is_empty()
    }

    /// Snapshots recorded by `Snap` script items, in order.
    pub fn snaps(&self) -> &[(String, GridSnapshot)] {
        &self.snaps
    }

    pub fn take_snaps(&mut self) -> Vec<(String, GridSnapshot)> {
        std::mem::take(&mut self.snaps)
    }

    /// Number of `present` batches received so far.
    pub fn present_count(&self) -> usize {
        self.presents
    }

    /// Total cells received through `present` so far.
    pub fn cells_presented(&self) -> usize {
        self.cells_presented
    }

    pub(crate) fn poll_input(&mut self) -> Option<InputEvent> {
        while let Some(item) = self.queue.pop_front() {
            match item {
                ScriptItem::Event(ev) => return Some(ev),
                ScriptItem::Wait(ms) => self.clock_ms += ms,
                ScriptItem::Snap(name) => {
                    let snap = self.snapshot();
                    self.snaps.push((name, snap));
                }
            }
        }
        None
    }

    pub(crate) fn present(&mut self, writes: &[Run]) {
        self.presents += 1;
        self.cells_presented += writes.iter().map(|r| r.cells.len()).sum::<usize>();
        let cols = self.size.cols as usize;
        for run in writes {
            let start = (run.y as usize - 1) * cols + (run.x as usize - 1);
            self.grid[start..start + run.cells.len()].copy_from_slice(&run.cells);
        }
    }

    pub(crate) fn set_cursor(&mut self, pos: Option<(i32, i32)>) {
        self.cursor = pos;
    }

    pub fn snapshot(&self) -> GridSnapshot {
        GridSnapshot { size: self.size, cells: self.grid.clone(), cursor: self.cursor }
    }

    /// Changes the size and queues the matching resize event.
    pub fn resize(&mut self, size: TerminalSize) {
        self.size = size;
        self.grid = vec![Cell::BLANK; size.cell_count()];
        self.cursor = None;
        self.queue.push_front(ScriptItem::Event(InputEvent::Resize(size)));
    }
}
