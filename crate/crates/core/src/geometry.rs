//! Integer rectangles in 1-based terminal coordinates.
//!
//! A [`Rect`] is a closed set of cells: the cell `(x, y)` is the top-left
//! corner and `(x + w - 1, y + h - 1)` the bottom-right one. A rect with
//! zero width or height holds no cells; all empty results are normalized
//! to [`Rect::EMPTY`] so they compare equal.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("negative rectangle size {w}x{h}")]
    NegativeSize { w: i32, h: i32 },
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Rect {
    pub x: i32,
    pub y: i32,
    pub w: i32,
    pub h: i32,
}

impl fmt::Debug for Rect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            write!(f, "Rect(empty)")
        } else {
            write!(f, "Rect({},{},{},{})", self.x, self.y, self.w, self.h)
        }
    }
}

impl Rect {
    pub const EMPTY: Rect = Rect { x: 0, y: 0, w: 0, h: 0 };

    /// Builds a rect, panicking on a negative size.
    ///
    /// Use [`Rect::try_new`] when the size comes from untrusted arithmetic.
    pub fn new(x: i32, y: i32, w: i32, h: i32) -> Rect {
        match Rect::try_new(x, y, w, h) {
            Ok(r) => r,
            Err(e) => panic!("{e}"),
        }
    }

    pub fn try_new(x: i32, y: i32, w: i32, h: i32) -> Result<Rect, GeometryError> {
        if w < 0 || h < 0 {
            return Err(GeometryError::NegativeSize { w, h });
        }
        if w == 0 || h == 0 {
            return Ok(Rect::EMPTY);
        }
        Ok(Rect { x, y, w, h })
    }

    /// Rect spanning two inclusive corners; empty when they are inverted.
    pub fn from_corners(x0: i32, y0: i32, x1: i32, y1: i32) -> Rect {
        if x1 < x0 || y1 < y0 {
            Rect::EMPTY
        } else {
            Rect { x: x0, y: y0, w: x1 - x0 + 1, h: y1 - y0 + 1 }
        }
    }

    pub fn is_empty(&self) -> bool {
        self.w <= 0 || self.h <= 0
    }

    pub fn right(&self) -> i32 {
        self.x + self.w - 1
    }

    pub fn bottom(&self) -> i32 {
        self.y + self.h - 1
    }

    pub fn area(&self) -> usize {
        if self.is_empty() {
            0
        } else {
            (self.w as usize) * (self.h as usize)
        }
    }

    pub fn contains(&self, px: i32, py: i32) -> bool {
        !self.is_empty() && px >= self.x && px <= self.right() && py >= self.y && py <= self.bottom()
    }

    pub fn intersect(&self, other: &Rect) -> Rect {
        if self.is_empty() || other.is_empty() {
            return Rect::EMPTY;
        }
        Rect::from_corners(
            self.x.max(other.x),
            self.y.max(other.y),
            self.right().min(other.right()),
            self.bottom().min(other.bottom()),
        )
    }

    pub fn intersects(&self, other: &Rect) -> bool {
        !self.intersect(other).is_empty()
    }

    /// Smallest rect containing both; an empty operand is the identity.
    pub fn union_bounds(&self, other: &Rect) -> Rect {
        match (self.is_empty(), other.is_empty()) {
            (true, true) => Rect::EMPTY,
            (true, false) => *other,
            (false, true) => *self,
            (false, false) => Rect::from_corners(
                self.x.min(other.x),
                self.y.min(other.y),
                self.right().max(other.right()),
                self.bottom().max(other.bottom()),
            ),
        }
    }

    /// The part of `self` inside `bounds`.
    pub fn clip(&self, bounds: &Rect) -> Rect {
        self.intersect(bounds)
    }

    pub fn translate(&self, dx: i32, dy: i32) -> Rect {
        if self.is_empty() {
            return Rect::EMPTY;
        }
        Rect { x: self.x + dx, y: self.y + dy, ..*self }
    }

    /// Shrinks every edge by `n` cells.
    pub fn inset(&self, n: i32) -> Rect {
        Rect::from_corners(self.x + n, self.y + n, self.right() - n, self.bottom() - n)
    }

    /// Iterates the cells row by row.
    pub fn cells(&self) -> impl Iterator<Item = (i32, i32)> + '_ {
        let r = *self;
        let (rows, cols) = if r.is_empty() { (0, 0) } else { (r.h, r.w) };
        (0..rows).flat_map(move |dy| (0..cols).map(move |dx| (r.x + dx, r.y + dy)))
    }

    pub fn row(&self, y: i32) -> Rect {
        self.intersect(&Rect { x: self.x, y, w: self.w, h: 1 })
    }
}
