//! Terminal abstraction.
//!
//! A [`Session`] owns either a real ANSI terminal or an in-memory headless
//! grid. Both accept the same batched writes and produce the same decoded
//! [`InputEvent`]s, so every higher layer runs unchanged in tests.

mod ansi;
mod headless;
mod input;
mod tty;

use std::fmt;
use std::sync::atomic::{AtomicBool, Ordering};

use thiserror::Error;

use crate::render::Cell;

pub use ansi::{AnsiTerminal, CaptureBuffer, CLOSE_SEQUENCE, OPEN_SEQUENCE};
pub use headless::{GridSnapshot, HeadlessTerminal, ScriptItem};
pub use input::{decode_all, encode_key, DecodeError, InputDecoder};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TerminalSize {
    pub rows: u16,
    pub cols: u16,
}

impl TerminalSize {
    /// Panics when either dimension is zero.
    pub fn new(cols: u16, rows: u16) -> TerminalSize {
        assert!(rows >= 1 && cols >= 1, "terminal size must be at least 1x1");
        TerminalSize { rows, cols }
    }

    pub fn cell_count(&self) -> usize {
        self.rows as usize * self.cols as usize
    }

    pub fn rect(&self) -> crate::geometry::Rect {
        crate::geometry::Rect::new(1, 1, self.cols as i32, self.rows as i32)
    }
}

impl fmt::Display for TerminalSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.cols, self.rows)
    }
}

/// The sixteen console colors, in their conventional code order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[repr(u8)]
pub enum Color {
    Black = 0,
    Blue = 1,
    Green = 2,
    Cyan = 3,
    Red = 4,
    Magenta = 5,
    Brown = 6,
    Grey = 7,
    DarkGrey = 8,
    LightBlue = 9,
    LightGreen = 10,
    LightCyan = 11,
    LightRed = 12,
    LightMagenta = 13,
    Yellow = 14,
    White = 15,
}

impl Color {
    pub const ALL: [Color; 16] = [
        Color::Black,
        Color::Blue,
        Color::Green,
        Color::Cyan,
        Color::Red,
        Color::Magenta,
        Color::Brown,
        Color::Grey,
        Color::DarkGrey,
        Color::LightBlue,
        Color::LightGreen,
        Color::LightCyan,
        Color::LightRed,
        Color::LightMagenta,
        Color::Yellow,
        Color::White,
    ];

    pub fn code(self) -> u8 {
        self as u8
    }

    pub fn from_code(code: u8) -> Option<Color> {
        Color::ALL.get(code as usize).copied()
    }

    /// SGR foreground parameter (30-37, 90-97).
    pub fn sgr_fg(self) -> u8 {
        // console order is BGR-ish, ANSI order is RGB-ish
        const ANSI: [u8; 8] = [0, 4, 2, 6, 1, 5, 3, 7];
        let c = self.code();
        if c < 8 {
            30 + ANSI[c as usize]
        } else {
            90 + ANSI[(c - 8) as usize]
        }
    }

    /// SGR background parameter (40-47, 100-107).
    pub fn sgr_bg(self) -> u8 {
        self.sgr_fg() + 10
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KeyCode {
    Char(char),
    Enter,
    Esc,
    Tab,
    BackTab,
    Backspace,
    Delete,
    Insert,
    Home,
    End,
    KeyPgUp,
    KeyPgDown,
    Up,
    Down,
    Left,
    Right,
    Space,
    F(u8),
}

impl KeyCode {
    /// Every non-character key, for tables and fuzzers.
    pub fn named() -> Vec<KeyCode> {
        let mut v = vec![
            KeyCode::Enter,
            KeyCode::Esc,
            KeyCode::Tab,
            KeyCode::BackTab,
            KeyCode::Backspace,
            KeyCode::Delete,
            KeyCode::Insert,
            KeyCode::Home,
            KeyCode::End,
            KeyCode::KeyPgUp,
            KeyCode::KeyPgDown,
            KeyCode::Up,
            KeyCode::Down,
            KeyCode::Left,
            KeyCode::Right,
            KeyCode::Space,
        ];
        v.extend((1..=12).map(KeyCode::F));
        v
    }

    /// Script name of a key (`KEY <name>` lines).
    pub fn name(&self) -> String {
        match self {
            KeyCode::Char(c) => c.to_string(),
            KeyCode::Enter => "ENTER".into(),
            KeyCode::Esc => "ESC".into(),
            KeyCode::Tab => "TAB".into(),
            KeyCode::BackTab => "BACKTAB".into(),
            KeyCode::Backspace => "BACKSPACE".into(),
            KeyCode::Delete => "DELETE".into(),
            KeyCode::Insert => "INSERT".into(),
            KeyCode::Home => "HOME".into(),
            KeyCode::End => "END".into(),
            KeyCode::KeyPgUp => "KEY_PGUP".into(),
            KeyCode::KeyPgDown => "KEY_PGDOWN".into(),
            KeyCode::Up => "UP".into(),
            KeyCode::Down => "DOWN".into(),
            KeyCode::Left => "LEFT".into(),
            KeyCode::Right => "RIGHT".into(),
            KeyCode::Space => "SPACE".into(),
            KeyCode::F(n) => format!("F{n}"),
        }
    }

    pub fn from_name(name: &str) -> Option<KeyCode> {
        let k = match name {
            "ENTER" => KeyCode::Enter,
            "ESC" => KeyCode::Esc,
            "TAB" => KeyCode::Tab,
            "BACKTAB" => KeyCode::BackTab,
            "BACKSPACE" => KeyCode::Backspace,
            "DELETE" => KeyCode::Delete,
            "INSERT" => KeyCode::Insert,
            "HOME" => KeyCode::Home,
            "END" => KeyCode::End,
            "KEY_PGUP" => KeyCode::KeyPgUp,
            "KEY_PGDOWN" => KeyCode::KeyPgDown,
            "UP" => KeyCode::Up,
            "DOWN" => KeyCode::Down,
            "LEFT" => KeyCode::Left,
            "RIGHT" => KeyCode::Right,
            "SPACE" => KeyCode::Space,
            f if f.starts_with('F') => {
                let n: u8 = f[1..].parse().ok()?;
                if !(1..=12).contains(&n) {
                    return None;
                }
                KeyCode::F(n)
            }
            _ => return None,
        };
        Some(k)
    }

    /// The character a key types into a text field, if any.
    pub fn typed_char(&self) -> Option<char> {
        match self {
            KeyCode::Char(c) => Some(*c),
            KeyCode::Space => Some(' '),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MouseButton {
    Left,
    Middle,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MouseKind {
    Press,
    Release,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MouseEvent {
    pub x: i32,
    pub y: i32,
    pub button: MouseButton,
    pub kind: MouseKind,
}

impl MouseEvent {
    pub fn press(x: i32, y: i32) -> MouseEvent {
        MouseEvent { x, y, button: MouseButton::Left, kind: MouseKind::Press }
    }

    pub fn release(x: i32, y: i32) -> MouseEvent {
        MouseEvent { x, y, button: MouseButton::Left, kind: MouseKind::Release }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputEvent {
    Key(KeyCode),
    Mouse(MouseEvent),
    Resize(TerminalSize),
    Tick,
}

/// One horizontal run of cells starting at `(x, y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Run {
    pub x: i32,
    pub y: i32,
    pub cells: Vec<Cell>,
}

#[derive(Debug, Error)]
pub enum BackendError {
    #[error("output is not a terminal")]
    NotATerminal,
    #[error("a terminal session is already open")]
    SessionAlreadyOpen,
    #[error("write at ({x},{y}) of {len} cells exceeds the {size} terminal")]
    OutOfBounds { x: i32, y: i32, len: usize, size: TerminalSize },
    #[error("snapshots are only available on the headless backend")]
    UnsupportedOnRealTerminal,
    #[error("session is closed")]
    Closed,
    #[error(transparent)]
    Decode(#[from] DecodeError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Real,
    Headless,
}

static REAL_SESSION_OPEN: AtomicBool = AtomicBool::new(false);

enum Backend {
    Ansi(AnsiTerminal),
    Headless(HeadlessTerminal),
}

pub struct Session {
    backend: Backend,
    holds_tty: bool,
    closed: bool,
}

impl Session {
    pub fn open(mode: Mode, headless_size: Option<TerminalSize>) -> Result<Session, BackendError> {
        match mode {
            Mode::Real => Session::open_real(),
            Mode::Headless => {
                Ok(Session::headless(headless_size.unwrap_or(TerminalSize::new(80, 24))))
            }
        }
    }

    /// Raw mode on the controlling terminal. Only one may be open per process.
    pub fn open_real() -> Result<Session, BackendError> {
        if !tty::is_terminal() {
            return Err(BackendError::NotATerminal);
        }
        if REAL_SESSION_OPEN
            .compare_exchange(false, true, Ordering::SeqCst, Ordering::SeqCst)
            .is_err()
        {
            return Err(BackendError::SessionAlreadyOpen);
        }
        match AnsiTerminal::open_tty() {
            Ok(term) => Ok(Session { backend: Backend::Ansi(term), holds_tty: true, closed: false }),
            Err(e) => {
                REAL_SESSION_OPEN.store(false, Ordering::SeqCst);
                Err(e)
            }
        }
    }

    pub fn headless(size: TerminalSize) -> Session {
        Session { backend: Backend::Headless(HeadlessTerminal::new(size)), holds_tty: false, closed: false }
    }

    /// Wraps an ANSI terminal that writes to an arbitrary stream (e.g. a capture buffer).
    pub fn from_ansi(term: AnsiTerminal) -> Session {
        Session { backend: Backend::Ansi(term), holds_tty: false, closed: false }
    }

    pub fn mode(&self) -> Mode {
        match self.backend {
            Backend::Ansi(_) => Mode::Real,
            Backend::Headless(_) => Mode::Headless,
        }
    }

    pub fn size(&self) -> TerminalSize {
        match &self.backend {
            Backend::Ansi(t) => t.size(),
            Backend::Headless(t) => t.size(),
        }
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    /// Next decoded event, or `None` once `timeout_ms` passes without one.
    pub fn poll_input(&mut self, timeout_ms: u64) -> Result<Option<InputEvent>, BackendError> {
        if self.closed {
            return Err(BackendError::Closed);
        }
        let size = self.size();
        let ev = match &mut self.backend {
            Backend::Ansi(t) => t.poll_input(timeout_ms)?,
            Backend::Headless(t) => t.poll_input(),
        };
        Ok(ev.map(|e| clamp_mouse(e, size)))
    }

    /// True when a headless session has consumed its whole input script.
    pub fn input_exhausted(&self) -> bool {
        match &self.backend {
            Backend::Ansi(t) => t.input_exhausted(),
            Backend::Headless(t) => t.input_exhausted(),
        }
    }

    /// Milliseconds since the session opened; headless sessions use a script-driven clock.
    pub fn now_ms(&self) -> u64 {
        match &self.backend {
            Backend::Ansi(t) => t.now_ms(),
            Backend::Headless(t) => t.now_ms(),
        }
    }

    pub fn present(&mut self, writes: &[Run]) -> Result<(), BackendError> {
        if self.closed {
            return Err(BackendError::Closed);
        }
        let size = self.size();
        for run in writes {
            check_bounds(size, run.x, run.y, run.cells.len())?;
        }
        match &mut self.backend {
            Backend::Ansi(t) => t.present(writes),
            Backend::Headless(t) => {
                t.present(writes);
                Ok(())
            }
        }
    }

    pub fn set_cursor(&mut self, pos: Option<(i32, i32)>) -> Result<(), BackendError> {
        if self.closed {
            return Err(BackendError::Closed);
        }
        if let Some((x, y)) = pos {
            check_bounds(self.size(), x, y, 1)?;
        }
        match &mut self.backend {
            Backend::Ansi(t) => t.set_cursor(pos),
            Backend::Headless(t) => {
                t.set_cursor(pos);
                Ok(())
            }
        }
    }

    pub fn snapshot(&self) -> Result<GridSnapshot, BackendError> {
        match &self.backend {
            Backend::Ansi(_) => Err(BackendError::UnsupportedOnRealTerminal),
            Backend::Headless(t) => Ok(t.snapshot()),
        }
    }

    /// Restores the terminal. Calling it again does nothing.
    pub fn close(&mut self) {
        if self.closed {
            return;
        }
        self.closed = true;
        match &mut self.backend {
            Backend::Ansi(t) => t.close(),
            Backend::Headless(_) => {}
        }
        if self.holds_tty {
            REAL_SESSION_OPEN.store(false, Ordering::SeqCst);
        }
    }

    pub fn headless_mut(&mut self) -> Option<&mut HeadlessTerminal> {
        match &mut self.backend {
            Backend::Headless(t) => Some(t),
            Backend::Ansi(_) => None,
        }
    }

    pub fn headless_ref(&self) -> Option<&HeadlessTerminal> {
        match &self.backend {
            Backend::Headless(t) => Some(t),
            Backend::Ansi(_) => None,
        }
    }

    pub fn ansi_mut(&mut self) -> Option<&mut AnsiTerminal> {
        match &mut self.backend {
            Backend::Ansi(t) => Some(t),
            Backend::Headless(_) => None,
        }
    }
}

impl Drop for Session {
    fn drop(&mut self) {
        self.close();
    }
}

fn check_bounds(size: TerminalSize, x: i32, y: i32, len: usize) -> Result<(), BackendError> {
    let end = x as i64 + len as i64 - 1;
    if x < 1 || y < 1 || y > size.rows as i32 || end > size.cols as i64 || (len > 0 && x > size.cols as i32) {
        return Err(BackendError::OutOfBounds { x, y, len, size });
    }
    Ok(())
}

fn clamp_mouse(ev: InputEvent, size: TerminalSize) -> InputEvent {
    match ev {
        InputEvent::Mouse(mut m) => {
            m.x = m.x.clamp(1, size.cols as i32);
            m.y = m.y.clamp(1, size.rows as i32);
            InputEvent::Mouse(m)
        }
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::render::Cell;

    #[test]
    fn color_codes_are_stable() {
        for (i, c) in Color::ALL.iter().enumerate() {
            assert_eq!(c.code() as usize, i);
            assert_eq!(Color::from_code(i as u8), Some(*c));
        }
        assert_eq!(Color::from_code(16), None);
        assert_eq!(Color::Black.sgr_fg(), 30);
        assert_eq!(Color::Red.sgr_fg(), 31);
        assert_eq!(Color::Blue.sgr_fg(), 34);
        assert_eq!(Color::Grey.sgr_fg(), 37);
        assert_eq!(Color::DarkGrey.sgr_fg(), 90);
        assert_eq!(Color::Yellow.sgr_fg(), 93);
        assert_eq!(Color::White.sgr_fg(), 97);
        assert_eq!(Color::Blue.sgr_bg(), 44);
        assert_eq!(Color::White.sgr_bg(), 107);
    }

    #[test]
    fn key_names_round_trip() {
        for k in KeyCode::named() {
            assert_eq!(KeyCode::from_name(&k.name()), Some(k));
        }
        assert_eq!(KeyCode::from_name("KEY_PGDN"), None);
        assert_eq!(KeyCode::from_name("F13"), None);
    }

    #[test]
    fn headless_open_is_blank() {
        let s = Session::open(Mode::Headless, Some(TerminalSize::new(80, 24))).unwrap();
        let snap = s.snapshot().unwrap();
        assert_eq!(snap.cells().len(), 1920);
        assert!(snap.cells().iter().all(|c| *c == Cell::BLANK));
    }

    #[test]
    fn present_bounds() {
        let mut s = Session::headless(TerminalSize::new(10, 3));
        let run = |x, n| Run { x, y: 1, cells: vec![Cell::new('a'); n] };
        s.present(&[run(9, 2)]).unwrap();
        assert!(matches!(s.present(&[run(10, 2)]), Err(BackendError::OutOfBounds { .. })));
        let hi = Run { x: 1, y: 1, cells: vec![Cell::new('H'), Cell::new('i')] };
        s.present(&[hi]).unwrap();
        let snap = s.snapshot().unwrap();
        assert_eq!(snap.cell(1, 1).glyph, 'H');
        assert_eq!(snap.cell(2, 1).glyph, 'i');
    }

    #[test]
    fn cursor_contract() {
        let mut s = Session::headless(TerminalSize::new(10, 3));
        s.set_cursor(Some((5, 3))).unwrap();
        assert_eq!(s.snapshot().unwrap().cursor(), Some((5, 3)));
        s.set_cursor(None).unwrap();
        assert_eq!(s.snapshot().unwrap().cursor(), None);
        assert!(matches!(s.set_cursor(Some((11, 1))), Err(BackendError::OutOfBounds { .. })));
    }

    #[test]
    fn snapshot_is_a_copy() {
        let mut s = Session::headless(TerminalSize::new(4, 2));
        s.present(&[Run { x: 1, y: 1, cells: vec![Cell::new('A')] }]).unwrap();
        let before = s.snapshot().unwrap();
        s.present(&[Run { x: 1, y: 1, cells: vec![Cell::new('B')] }]).unwrap();
        assert_eq!(before.cell(1, 1).glyph, 'A');
        assert_eq!(s.snapshot().unwrap().cell(1, 1).glyph, 'B');
    }

    #[test]
    fn headless_close_keeps_snapshot_and_is_idempotent() {
        let mut s = Session::headless(TerminalSize::new(4, 2));
        s.present(&[Run { x: 2, y: 2, cells: vec![Cell::new('Z')] }]).unwrap();
        s.close();
        s.close();
        assert_eq!(s.snapshot().unwrap().cell(2, 2).glyph, 'Z');
    }

    #[test]
    fn real_on_non_tty_is_rejected() {
        // the test harness's stdout is a pipe or file
        if !tty::is_terminal() {
            assert!(matches!(Session::open(Mode::Real, None), Err(BackendError::NotATerminal)));
        }
    }

    #[test]
    fn snapshot_on_real_is_unsupported() {
        let term = AnsiTerminal::with_writer(Box::new(Vec::new()), TerminalSize::new(10, 3));
        let s = Session::from_ansi(term);
        assert!(matches!(s.snapshot(), Err(BackendError::UnsupportedOnRealTerminal)));
    }
}
