//! ANSI/VT output and input for a real terminal (or any byte sink).

use std::cell::RefCell;
use std::collections::VecDeque;
use std::io::{self, Write};
use std::rc::Rc;
use std::time::Instant;

use super::input::InputDecoder;
use super::tty::{self, RawMode};
use super::{BackendError, Color, InputEvent, Run, TerminalSize};

/// Mouse on (button + SGR), cursor off, white-on-black, clear.
pub const OPEN_SEQUENCE: &str = "\x1b[?1000h\x1b[?1006h\x1b[?25l\x1b[97;40m\x1b[2J";
/// Mouse off in reverse order, colors reset, clear, home, cursor on.
pub const CLOSE_SEQUENCE: &str = "\x1b[?1006l\x1b[?1000l\x1b[0m\x1b[2J\x1b[H\x1b[?25h";

// extra wait after a lone ESC before deciding it is the Escape key
const ESC_GRACE_MS: u64 = 25;

/// A cloneable in-memory sink, handy for capturing the output stream.
#[derive(Clone, Default)]
pub struct CaptureBuffer(Rc<RefCell<Vec<u8>>>);

impl CaptureBuffer {
    pub fn new() -> CaptureBuffer {
        CaptureBuffer::default()
    }

    pub fn contents(&self) -> Vec<u8> {
        self.0.borrow().clone()
    }

    pub fn take(&self) -> Vec<u8> {
        std::mem::take(&mut *self.0.borrow_mut())
    }
}

impl Write for CaptureBuffer {
    fn write(&mut self, buf: &[u8]) -> io::Result<usize> {
        self.0.borrow_mut().extend_from_slice(buf);
        Ok(buf.len())
    }

    fn flush(&mut self) -> io::Result<()> {
        Ok(())
    }
}

enum Source {
    Stdin,
    Bytes(VecDeque<u8>),
}

pub struct AnsiTerminal {
    out: Box<dyn Write>,
    source: Source,
    decoder: InputDecoder,
    size: TerminalSize,
    raw: Option<RawMode>,
    cursor_visible: bool,
    started: Instant,
    closed: bool,
}

impl AnsiTerminal {
    pub(crate) fn open_tty() -> Result<AnsiTerminal, BackendError> {
        let size = tty::window_size().unwrap_or(TerminalSize::new(80, 24));
        let raw = RawMode::enable()?;
        let mut term = AnsiTerminal::build(Box::new(io::stdout()), Source::Stdin, size);
        term.raw = Some(raw);
        term.write_all(OPEN_SEQUENCE.as_bytes())?;
        Ok(term)
    }

    /// A terminal writing to `out` with a fixed size and scripted input.
    ///
    /// The setup sequence is written immediately, exactly as on a tty.
    pub fn with_writer(out: Box<dyn Write>, size: TerminalSize) -> AnsiTerminal {
        let mut term = AnsiTerminal::build(out, Source::Bytes(VecDeque::new()), size);
        // a failing sink surfaces again on the first present()
        let _ = term.write_all(OPEN_SEQUENCE.as_bytes());
        term
    }

    fn build(out: Box<dyn Write>, source: Source, size: TerminalSize) -> AnsiTerminal {
        AnsiTerminal {
            out,
            source,
            decoder: InputDecoder::new(),
            size,
            raw: None,
            cursor_visible: false,
            started: Instant::now(),
            closed: false,
        }
    }

    /// Queues raw input bytes (only for terminals built with [`with_writer`](Self::with_writer)).
    pub fn feed_input(&mut self, bytes: &[u8]) {
        if let Source::Bytes(q) = &mut self.source {
            q.extend(bytes);
        }
    }

    pub fn size(&self) -> TerminalSize {
        self.size
    }

    pub(crate) fn now_ms(&self) -> u64 {
        self.started.elapsed().as_millis() as u64
    }

    pub(crate) fn input_exhausted(&self) -> bool {
        match &self.source {
            Source::Stdin => false,
            Source::Bytes(q) => q.is_empty() && self.decoder.pending().is_empty(),
        }
    }

    fn write_all(&mut self, bytes: &[u8]) -> io::Result<()> {
        self.out.write_all(bytes)?;
        self.out.flush()
    }

    pub(crate) fn poll_input(&mut self, timeout_ms: u64) -> Result<Option<InputEvent>, BackendError> {
        if let Source::Stdin = self.source {
            if let Some(size) = tty::window_size() {
                if size != self.size {
                    self.size = size;
                    return Ok(Some(InputEvent::Resize(size)));
                }
            }
        }
        if let Some(ev) = self.decoder.next_event() {
            return Ok(Some(ev?));
        }
        let mut bytes = Vec::new();
        self.read(timeout_ms, &mut bytes)?;
        self.decoder.feed(&bytes);
        if let Some(ev) = self.decoder.next_event() {
            return Ok(Some(ev?));
        }
        if self.decoder.has_lone_escape() {
            bytes.clear();
            self.read(ESC_GRACE_MS, &mut bytes)?;
            self.decoder.feed(&bytes);
            if bytes.is_empty() {
                return Ok(self.decoder.flush_pending());
            }
            if let Some(ev) = self.decoder.next_event() {
                return Ok(Some(ev?));
            }
        }
        Ok(None)
    }

    fn read(&mut self, timeout_ms: u64, out: &mut Vec<u8>) -> io::Result<()> {
        match &mut self.source {
            Source::Stdin => {
                tty::read_stdin(timeout_ms, out)?;
            }
            Source::Bytes(q) => out.extend(q.drain(..)),
        }
        Ok(())
    }

    pub(crate) fn present(&mut self, writes: &[Run]) -> Result<(), BackendError> {
        if writes.is_empty() {
            return Ok(());
        }
        let mut buf = Vec::with_capacity(writes.len() * 16);
        if self.cursor_visible {
            buf.extend_from_slice(b"\x1b[?25l");
            self.cursor_visible = false;
        }
        let mut colors: Option<(Color, Color)> = None;
        for run in writes {
            write!(buf, "\x1b[{};{}H", run.y, run.x)?;
            for cell in &run.cells {
                if colors != Some((cell.fg, cell.bg)) {
                    write!(buf, "\x1b[{};{}m", cell.fg.sgr_fg(), cell.bg.sgr_bg())?;
                    colors = Some((cell.fg, cell.bg));
                }
                let mut tmp = [0u8; 4];
                buf.extend_from_slice(cell.glyph.encode_utf8(&mut tmp).as_bytes());
            }
        }
        self.write_all(&buf)?;
        Ok(())
    }

    pub(crate) fn set_cursor(&mut self, pos: Option<(i32, i32)>) -> Result<(), BackendError> {
        match pos {
            Some((x, y)) => {
                let seq = format!("\x1b[{y};{x}H\x1b[?25h");
                self.write_all(seq.as_bytes())?;
                self.cursor_visible = true;
            }
            None if self.cursor_visible => {
                self.write_all(b"\x1b[?25l")?;
                self.cursor_visible = false;
            }
            None => {}
        }
        Ok(())
    }

    pub(crate) fn close(&mut self) {
        if self.closed {
            return;
        }
        self.closed = true;
        let _ = self.write_all(CLOSE_SEQUENCE.as_bytes());
        if let Some(raw) = self.raw.take() {
            raw.restore();
        }
    }
}

impl Drop for AnsiTerminal {
    fn drop(&mut self) {
        self.close();
    }
}
