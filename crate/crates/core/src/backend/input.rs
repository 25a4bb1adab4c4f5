//! Byte-stream decoding of xterm keyboard and mouse input.
//!
//! The decoder keeps partial escape sequences buffered across `feed` calls.
//! Sequences it does not understand are dropped whole; only mouse reports
//! that are provably malformed surface as [`DecodeError`].

use thiserror::Error;

use super::{InputEvent, KeyCode, MouseButton, MouseEvent, MouseKind};

const ESC: u8 = 0x1b;
// longest CSI we are willing to buffer before declaring it garbage
const MAX_CSI_LEN: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecodeError {
    #[error("malformed mouse report: {0}")]
    MalformedMouse(String),
}

#[derive(Debug, Default)]
pub struct InputDecoder {
    buf: Vec<u8>,
}

enum Step {
    Event(InputEvent, usize),
    Error(DecodeError, usize),
    Skip(usize),
    Incomplete,
}

impl InputDecoder {
    pub fn new() -> InputDecoder {
        InputDecoder::default()
    }

    pub fn feed(&mut self, bytes: &[u8]) {
        self.buf.extend_from_slice(bytes);
    }

    pub fn pending(&self) -> &[u8] {
        &self.buf
    }

    /// True when the only buffered input is a bare ESC byte.
    pub fn has_lone_escape(&self) -> bool {
        self.buf == [ESC]
    }

    /// Next complete event, `None` when the buffer is empty or holds only a prefix.
    pub fn next_event(&mut self) -> Option<Result<InputEvent, DecodeError>> {
        loop {
            if self.buf.is_empty() {
                return None;
            }
            match step(&self.buf) {
                Step::Event(ev, n) => {
                    self.buf.drain(..n);
                    return Some(Ok(ev));
                }
                Step::Error(e, n) => {
                    self.buf.drain(..n);
                    return Some(Err(e));
                }
                Step::Skip(n) => {
                    self.buf.drain(..n.max(1));
                }
                Step::Incomplete => return None,
            }
        }
    }

    /// Called when input went quiet: a lone ESC is the Escape key.
    pub fn flush_pending(&mut self) -> Option<InputEvent> {
        if self.has_lone_escape() {
            self.buf.clear();
            return Some(InputEvent::Key(KeyCode::Esc));
        }
        None
    }
}

/// Decodes a complete byte string, treating its end as quiet input.
pub fn decode_all(bytes: &[u8]) -> Vec<Result<InputEvent, DecodeError>> {
    let mut d = InputDecoder::new();
    d.feed(bytes);
    let mut out = Vec::new();
    while let Some(ev) = d.next_event() {
        out.push(ev);
    }
    if let Some(ev) = d.flush_pending() {
        out.push(Ok(ev));
    }
    out
}

/// Wire encoding of a key, as an xterm in normal cursor mode sends it.
pub fn encode_key(key: KeyCode) -> Vec<u8> {
    let s: &str = match key {
        KeyCode::Char(c) => {
            let mut b = [0u8; 4];
            return c.encode_utf8(&mut b).as_bytes().to_vec();
        }
        KeyCode::Enter => "\r",
        KeyCode::Esc => "\x1b",
        KeyCode::Tab => "\t",
        KeyCode::BackTab => "\x1b[Z",
        KeyCode::Backspace => "\x7f",
        KeyCode::Delete => "\x1b[3~",
        KeyCode::Insert => "\x1b[2~",
        KeyCode::Home => "\x1b[H",
        KeyCode::End => "\x1b[F",
        KeyCode::KeyPgUp => "\x1b[5~",
        KeyCode::KeyPgDown => "\x1b[6~",
        KeyCode::Up => "\x1b[A",
        KeyCode::Down => "\x1b[B",
        KeyCode::Right => "\x1b[C",
        KeyCode::Left => "\x1b[D",
        KeyCode::Space => " ",
        KeyCode::F(1) => "\x1bOP",
        KeyCode::F(2) => "\x1bOQ",
        KeyCode::F(3) => "\x1bOR",
        KeyCode::F(4) => "\x1bOS",
        KeyCode::F(n) => {
            return match f_key_code(n) {
                Some(p) => format!("\x1b[{p}~").into_bytes(),
                None => Vec::new(),
            }
        }
    };
    s.as_bytes().to_vec()
}

fn f_key_code(n: u8) -> Option<u8> {
    Some(match n {
        5 => 15,
        6 => 17,
        7 => 18,
        8 => 19,
        9 => 20,
        10 => 21,
        11 => 23,
        12 => 24,
        _ => return None,
    })
}

fn key(k: KeyCode, n: usize) -> Step {
    Step::Event(InputEvent::Key(k), n)
}

fn step(buf: &[u8]) -> Step {
    let b0 = buf[0];
    match b0 {
        ESC => escape(buf),
        b'\r' | b'\n' => key(KeyCode::Enter, 1),
        b'\t' => key(KeyCode::Tab, 1),
        0x7f | 0x08 => key(KeyCode::Backspace, 1),
        b' ' => key(KeyCode::Space, 1),
        0x21..=0x7e => key(KeyCode::Char(b0 as char), 1),
        0x80..=0xff => utf8(buf),
        _ => Step::Skip(1),
    }
}

fn utf8(buf: &[u8]) -> Step {
    let len = match buf[0] {
        0xc2..=0xdf => 2,
        0xe0..=0xef => 3,
        0xf0..=0xf4 => 4,
        _ => return Step::Skip(1),
    };
    if buf.len() < len {
        // a non-continuation byte inside the prefix means it can never complete
        if buf[1..].iter().any(|b| b & 0xc0 != 0x80) {
            return Step::Skip(1);
        }
        return Step::Incomplete;
    }
    match std::str::from_utf8(&buf[..len]) {
        Ok(s) => match s.chars().next() {
            Some(c) if !c.is_control() => key(KeyCode::Char(c), len),
            _ => Step::Skip(len),
        },
        Err(_) => Step::Skip(1),
    }
}

fn escape(buf: &[u8]) -> Step {
    if buf.len() < 2 {
        return Step::Incomplete;
    }
    match buf[1] {
        b'[' => csi(buf),
        b'O' => {
            if buf.len() < 3 {
                return Step::Incomplete;
            }
            let k = match buf[2] {
                b'P' => KeyCode::F(1),
                b'Q' => KeyCode::F(2),
                b'R' => KeyCode::F(3),
                b'S' => KeyCode::F(4),
                b'A' => KeyCode::Up,
                b'B' => KeyCode::Down,
                b'C' => KeyCode::Right,
                b'D' => KeyCode::Left,
                b'H' => KeyCode::Home,
                b'F' => KeyCode::End,
                _ => return Step::Skip(3),
            };
            key(k, 3)
        }
        // ESC followed by anything else: the Escape key, the rest decodes on its own
        _ => key(KeyCode::Esc, 1),
    }
}

fn csi(buf: &[u8]) -> Step {
    if buf.len() < 3 {
        return Step::Incomplete;
    }
    match buf[2] {
        b'M' => x10_mouse(buf),
        b'<' => sgr_mouse(buf),
        _ => generic_csi(buf),
    }
}

fn x10_mouse(buf: &[u8]) -> Step {
    if buf.len() < 6 {
        return Step::Incomplete;
    }
    let (cb, cx, cy) = (buf[3], buf[4], buf[5]);
    if cb < 32 || cx <= 32 || cy <= 32 {
        return Step::Error(DecodeError::MalformedMouse(format!("x10 bytes {cb} {cx} {cy}")), 6);
    }
    let cb = cb - 32;
    if cb & (32 | 64) != 0 {
        // motion or wheel
        return Step::Skip(6);
    }
    let (button, kind) = match cb & 3 {
        0 => (MouseButton::Left, MouseKind::Press),
        1 => (MouseButton::Middle, MouseKind::Press),
        2 => (MouseButton::Right, MouseKind::Press),
        _ => (MouseButton::Left, MouseKind::Release),
    };
    let m = MouseEvent { x: (cx - 32) as i32, y: (cy - 32) as i32, button, kind };
    Step::Event(InputEvent::Mouse(m), 6)
}

fn sgr_mouse(buf: &[u8]) -> Step {
    let mut end = None;
    for (i, &b) in buf.iter().enumerate().skip(3) {
        match b {
            b'0'..=b'9' | b';' => {}
            b'M' | b'm' => {
                end = Some(i);
                break;
            }
            _ => {
                let n = if (0x40..=0x7e).contains(&b) { i + 1 } else { i };
                let raw = String::from_utf8_lossy(&buf[..n]).into_owned();
                return Step::Error(DecodeError::MalformedMouse(raw), n);
            }
        }
        if i >= MAX_CSI_LEN {
            return Step::Error(DecodeError::MalformedMouse("overlong report".into()), i + 1);
        }
    }
    let Some(end) = end else {
        return Step::Incomplete;
    };
    let body = std::str::from_utf8(&buf[3..end]).unwrap_or("");
    let parts: Vec<&str> = body.split(';').collect();
    let parsed: Option<Vec<u32>> = parts.iter().map(|p| p.parse().ok()).collect();
    let fields = match parsed {
        Some(v) if v.len() == 3 => v,
        _ => {
            let raw = String::from_utf8_lossy(&buf[..=end]).into_owned();
            return Step::Error(DecodeError::MalformedMouse(raw), end + 1);
        }
    };
    let (cb, x, y) = (fields[0], fields[1], fields[2]);
    if x == 0 || y == 0 || x > i32::MAX as u32 || y > i32::MAX as u32 {
        let raw = String::from_utf8_lossy(&buf[..=end]).into_owned();
        return Step::Error(DecodeError::MalformedMouse(raw), end + 1);
    }
    if cb & (32 | 64) != 0 {
        return Step::Skip(end + 1);
    }
    let button = match cb & 3 {
        0 => MouseButton::Left,
        1 => MouseButton::Middle,
        2 => MouseButton::Right,
        _ => return Step::Skip(end + 1),
    };
    let kind = if buf[end] == b'M' { MouseKind::Press } else { MouseKind::Release };
    Step::Event(InputEvent::Mouse(MouseEvent { x: x as i32, y: y as i32, button, kind }), end + 1)
}

fn generic_csi(buf: &[u8]) -> Step {
    let mut i = 2;
    while i < buf.len() && (0x30..=0x3f).contains(&buf[i]) {
        i += 1;
    }
    let params_end = i;
    while i < buf.len() && (0x20..=0x2f).contains(&buf[i]) {
        i += 1;
    }
    if i >= buf.len() {
        if i > MAX_CSI_LEN {
            return Step::Skip(i);
        }
        return Step::Incomplete;
    }
    let fin = buf[i];
    if !(0x40..=0x7e).contains(&fin) {
        // not a CSI after all; drop what we consumed and resync on this byte
        return Step::Skip(i);
    }
    let n = i + 1;
    let params = std::str::from_utf8(&buf[2..params_end]).unwrap_or("");
    let first: Option<u32> = params.split(';').next().and_then(|p| p.parse().ok());
    let k = match fin {
        b'A' => KeyCode::Up,
        b'B' => KeyCode::Down,
        b'C' => KeyCode::Right,
        b'D' => KeyCode::Left,
        b'H' => KeyCode::Home,
        b'F' => KeyCode::End,
        b'Z' => KeyCode::BackTab,
        b'P' if params.starts_with("1;") => KeyCode::F(1),
        b'Q' if params.starts_with("1;") => KeyCode::F(2),
        b'R' if params.starts_with("1;") => KeyCode::F(3),
        b'S' if params.starts_with("1;") => KeyCode::F(4),
        b'~' => match first {
            Some(1) | Some(7) => KeyCode::Home,
            Some(2) => KeyCode::Insert,
            Some(3) => KeyCode::Delete,
            Some(4) | Some(8) => KeyCode::End,
            Some(5) => KeyCode::KeyPgUp,
            Some(6) => KeyCode::KeyPgDown,
            Some(11) => KeyCode::F(1),
            Some(12) => KeyCode::F(2),
            Some(13) => KeyCode::F(3),
            Some(14) => KeyCode::F(4),
            Some(15) => KeyCode::F(5),
            Some(17) => KeyCode::F(6),
            Some(18) => KeyCode::F(7),
            Some(19) => KeyCode::F(8),
            Some(20) => KeyCode::F(9),
            Some(21) => KeyCode::F(10),
            Some(23) => KeyCode::F(11),
            Some(24) => KeyCode::F(12),
            _ => return Step::Skip(n),
        },
        _ => return Step::Skip(n),
    };
    key(k, n)
}
