//! Double-buffered cell rendering.
//!
//! Widgets draw into the back buffer of a [`FrameBuffer`]. [`FrameBuffer::flush`]
//! compares it to the front buffer (what the terminal currently shows),
//! sends only the differing cells as horizontal runs, then makes the two equal.

use thiserror::Error;

use crate::backend::{BackendError, Color, Run, Session, TerminalSize};
use crate::geometry::Rect;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Cell {
    pub glyph: char,
    pub fg: Color,
    pub bg: Color,
}

impl Cell {
    pub const BLANK: Cell = Cell { glyph: ' ', fg: Color::White, bg: Color::Black };
    // never produced by drawing, so a front buffer full of it diffs against anything
    const INVALID: Cell = Cell { glyph: '\0', fg: Color::Black, bg: Color::Black };

    pub fn new(glyph: char) -> Cell {
        Cell { glyph, ..Cell::BLANK }
    }

    pub fn with_colors(glyph: char, fg: Color, bg: Color) -> Cell {
        Cell { glyph, fg, bg }
    }
}

impl Default for Cell {
    fn default() -> Cell {
        Cell::BLANK
    }
}

/// Foreground/background pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Style {
    pub fg: Color,
    pub bg: Color,
}

impl Style {
    pub const fn new(fg: Color, bg: Color) -> Style {
        Style { fg, bg }
    }

    pub fn inverse(self) -> Style {
        Style { fg: self.bg, bg: self.fg }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BorderStyle {
    Single,
    Double,
}

/// Which glyphs frames and decorations use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GlyphSet {
    #[default]
    Ascii,
    Unicode,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BorderGlyphs {
    pub top_left: char,
    pub top_right: char,
    pub bottom_left: char,
    pub bottom_right: char,
    pub horizontal: char,
    pub vertical: char,
}

impl GlyphSet {
    pub fn border(self, style: BorderStyle) -> BorderGlyphs {
        match (self, style) {
            (GlyphSet::Ascii, BorderStyle::Single) => BorderGlyphs {
                top_left: '+',
                top_right: '+',
                bottom_left: '+',
                bottom_right: '+',
                horizontal: '-',
                vertical: '|',
            },
            (GlyphSet::Ascii, BorderStyle::Double) => BorderGlyphs {
                top_left: '+',
                top_right: '+',
                bottom_left: '+',
                bottom_right: '+',
                horizontal: '=',
                vertical: '|',
            },
            (GlyphSet::Unicode, BorderStyle::Single) => BorderGlyphs {
                top_left: '┌',
                top_right: '┐',
                bottom_left: '└',
                bottom_right: '┘',
                horizontal: '─',
                vertical: '│',
            },
            (GlyphSet::Unicode, BorderStyle::Double) => BorderGlyphs {
                top_left: '╔',
                top_right: '╗',
                bottom_left: '╚',
                bottom_right: '╝',
                horizontal: '═',
                vertical: '║',
            },
        }
    }

    /// Glyph for the maximize/restore title-bar button.
    pub fn maximize(self) -> char {
        match self {
            GlyphSet::Ascii => '^',
            GlyphSet::Unicode => '□',
        }
    }
}

#[derive(Debug, Error)]
pub enum RenderError {
    #[error("control character {0:?} in text")]
    ControlCharacter(char),
    #[error("border rect {0:?} is smaller than 2x2")]
    TooSmall(Rect),
    #[error("framebuffer is {fb} but the terminal is {term}")]
    SizeMismatch { fb: TerminalSize, term: TerminalSize },
    #[error("pop_clip on an empty clip stack")]
    ClipStackUnderflow,
    #[error(transparent)]
    Backend(#[from] BackendError),
}

/// Result of one flush.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct DiffStats {
    pub cells_written: usize,
    pub runs: usize,
}

/// Pads with spaces or truncates so the result is exactly `w` characters.
pub fn fixed_width(text: &str, w: usize) -> String {
    let mut s: String = text.chars().take(w).collect();
    let n = s.chars().count();
    s.extend(std::iter::repeat_n(' ', w - n));
    s
}

pub struct FrameBuffer {
    size: TerminalSize,
    back: Vec<Cell>,
    front: Vec<Cell>,
    clip_stack: Vec<Rect>,
    cursor_req: Option<(i32, i32)>,
    presented_cursor: Option<Option<(i32, i32)>>,
    glyphs: GlyphSet,
}

impl FrameBuffer {
    /// Both buffers start blank, matching a freshly opened session.
    pub fn new(size: TerminalSize) -> FrameBuffer {
        FrameBuffer {
            size,
            back: vec![Cell::BLANK; size.cell_count()],
            front: vec![Cell::BLANK; size.cell_count()],
            clip_stack: Vec::new(),
            cursor_req: None,
            presented_cursor: None,
            glyphs: GlyphSet::Ascii,
        }
    }

    pub fn size(&self) -> TerminalSize {
        self.size
    }

    pub fn bounds(&self) -> Rect {
        self.size.rect()
    }

    pub fn glyphs(&self) -> GlyphSet {
        self.glyphs
    }

    pub fn set_glyphs(&mut self, glyphs: GlyphSet) {
        self.glyphs = glyphs;
    }

    fn index(&self, x: i32, y: i32) -> Option<usize> {
        if x < 1 || y < 1 || x > self.size.cols as i32 || y > self.size.rows as i32 {
            return None;
        }
        Some((y as usize - 1) * self.size.cols as usize + (x as usize - 1))
    }

    /// Back-buffer cell, or `None` off screen.
    pub fn cell(&self, x: i32, y: i32) -> Option<Cell> {
        self.index(x, y).map(|i| self.back[i])
    }

    pub fn front_cell(&self, x: i32, y: i32) -> Option<Cell> {
        self.index(x, y).map(|i| self.front[i])
    }

    pub fn back_cells(&self) -> &[Cell] {
        &self.back
    }

    pub fn row_text(&self, y: i32) -> String {
        (1..=self.size.cols as i32).filter_map(|x| self.cell(x, y)).map(|c| c.glyph).collect()
    }

    /// Intersection of the screen with every pushed clip rect.
    pub fn effective_clip(&self) -> Rect {
        self.clip_stack.iter().fold(self.bounds(), |acc, r| acc.intersect(r))
    }

    pub fn push_clip(&mut self, r: Rect) {
        self.clip_stack.push(r);
    }

    pub fn pop_clip(&mut self) -> Result<Rect, RenderError> {
        self.clip_stack.pop().ok_or(RenderError::ClipStackUnderflow)
    }

    pub fn clip_depth(&self) -> usize {
        self.clip_stack.len()
    }

    /// Runs `f` with `r` pushed, popping afterwards.
    pub fn with_clip<T>(&mut self, r: Rect, f: impl FnOnce(&mut FrameBuffer) -> T) -> T {
        self.push_clip(r);
        let out = f(self);
        self.clip_stack.pop();
        out
    }

    /// Writes one cell if it lies inside the effective clip.
    pub fn put_cell(&mut self, x: i32, y: i32, cell: Cell) {
        if !self.effective_clip().contains(x, y) {
            return;
        }
        if let Some(i) = self.index(x, y) {
            self.back[i] = cell;
        }
    }

    /// Writes `text` left to right from `(x, y)`; never wraps.
    pub fn put_text(&mut self, x: i32, y: i32, text: &str, fg: Color, bg: Color) -> Result<(), RenderError> {
        if let Some(c) = text.chars().find(|c| c.is_control()) {
            return Err(RenderError::ControlCharacter(c));
        }
        let clip = self.effective_clip();
        if y < clip.y || y > clip.bottom() {
            return Ok(());
        }
        for (i, glyph) in text.chars().enumerate() {
            let cx = x + i as i32;
            if cx > clip.right() {
                break;
            }
            if cx >= clip.x {
                let idx = self.index(cx, y).expect("clip is inside the screen");
                self.back[idx] = Cell { glyph, fg, bg };
            }
        }
        Ok(())
    }

    /// Like [`put_text`](Self::put_text) but replaces control characters with '?'.
    pub fn put_str(&mut self, x: i32, y: i32, text: &str, style: Style) {
        let clean: String = text.chars().map(|c| if c.is_control() { '?' } else { c }).collect();
        let _ = self.put_text(x, y, &clean, style.fg, style.bg);
    }

    pub fn fill_rect(&mut self, r: Rect, glyph: char, fg: Color, bg: Color) {
        let area = r.intersect(&self.effective_clip());
        if area.is_empty() {
            return;
        }
        let cell = Cell { glyph, fg, bg };
        for y in area.y..=area.bottom() {
            let start = self.index(area.x, y).expect("clipped");
            self.back[start..start + area.w as usize].fill(cell);
        }
    }

    pub fn draw_border(&mut self, r: Rect, style: BorderStyle, fg: Color, bg: Color) -> Result<(), RenderError> {
        if r.w < 2 || r.h < 2 {
            return Err(RenderError::TooSmall(r));
        }
        let g = self.glyphs.border(style);
        let mk = |glyph| Cell { glyph, fg, bg };
        for x in r.x + 1..r.right() {
            self.put_cell(x, r.y, mk(g.horizontal));
            self.put_cell(x, r.bottom(), mk(g.horizontal));
        }
        for y in r.y + 1..r.bottom() {
            self.put_cell(r.x, y, mk(g.vertical));
            self.put_cell(r.right(), y, mk(g.vertical));
        }
        self.put_cell(r.x, r.y, mk(g.top_left));
        self.put_cell(r.right(), r.y, mk(g.top_right));
        self.put_cell(r.x, r.bottom(), mk(g.bottom_left));
        self.put_cell(r.right(), r.bottom(), mk(g.bottom_right));
        Ok(())
    }

    /// Horizontal line of `len` cells.
    pub fn hline(&mut self, x: i32, y: i32, len: i32, glyph: char, style: Style) {
        self.fill_rect(Rect::new(x, y, len.max(0), 1), glyph, style.fg, style.bg);
    }

    /// Requests the hardware cursor at `pos` (or hidden) on the next flush.
    pub fn set_cursor(&mut self, pos: Option<(i32, i32)>) {
        self.cursor_req = pos;
    }

    pub fn cursor(&self) -> Option<(i32, i32)> {
        self.cursor_req
    }

    pub fn clear(&mut self) {
        self.back.fill(Cell::BLANK);
    }

    /// Copies the back-buffer cells under `r` (clipped to the screen), row-major.
    pub fn copy_region(&self, r: Rect) -> Vec<Cell> {
        let r = r.intersect(&self.bounds());
        r.cells().map(|(x, y)| self.back[self.index(x, y).expect("clipped")]).collect()
    }

    /// Inverse of [`copy_region`](Self::copy_region); ignores the clip stack.
    pub fn restore_region(&mut self, r: Rect, cells: &[Cell]) {
        let r = r.intersect(&self.bounds());
        for ((x, y), c) in r.cells().zip(cells) {
            let i = self.index(x, y).expect("clipped");
            self.back[i] = *c;
        }
    }

    /// Forgets what the terminal shows so the next flush rewrites every cell.
    pub fn invalidate(&mut self) {
        self.front.fill(Cell::INVALID);
        self.presented_cursor = None;
    }

    pub fn resize(&mut self, size: TerminalSize) {
        self.size = size;
        self.back = vec![Cell::BLANK; size.cell_count()];
        self.front = vec![Cell::INVALID; size.cell_count()];
        self.clip_stack.clear();
        self.cursor_req = None;
        self.presented_cursor = None;
    }

    /// Number of cells that differ between back and front.
    pub fn pending_changes(&self) -> usize {
        self.back.iter().zip(&self.front).filter(|(b, f)| b != f).count()
    }

    /// The horizontal runs of cells the next flush would send.
    pub fn diff_runs(&self) -> Vec<Run> {
        let cols = self.size.cols as usize;
        let mut runs = Vec::new();
        for row in 0..self.size.rows as usize {
            let base = row * cols;
            let mut x = 0;
            while x < cols {
                if self.back[base + x] == self.front[base + x] {
                    x += 1;
                    continue;
                }
                let start = x;
                while x < cols && self.back[base + x] != self.front[base + x] {
                    x += 1;
                }
                runs.push(Run {
                    x: start as i32 + 1,
                    y: row as i32 + 1,
                    cells: self.back[base + start..base + x].to_vec(),
                });
            }
        }
        runs
    }

    /// Presents the difference between back and front in one batch.
    pub fn flush(&mut self, session: &mut Session) -> Result<DiffStats, RenderError> {
        let term = session.size();
        if term != self.size {
            return Err(RenderError::SizeMismatch { fb: self.size, term });
        }
        let runs = self.diff_runs();
        let stats = DiffStats { cells_written: runs.iter().map(|r| r.cells.len()).sum(), runs: runs.len() };
        if !runs.is_empty() {
            session.present(&runs)?;
            self.front.copy_from_slice(&self.back);
        }
        let cursor = self.cursor_req.filter(|&(x, y)| self.bounds().contains(x, y));
        if !runs.is_empty() || self.presented_cursor != Some(cursor) {
            session.set_cursor(cursor)?;
            self.presented_cursor = Some(cursor);
        }
        Ok(stats)
    }
}
