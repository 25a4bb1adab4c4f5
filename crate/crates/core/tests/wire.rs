//! The ANSI byte stream, replayed by a small independent VT interpreter,
//! must leave the same screen as the headless backend.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cellui::backend::{
    encode_key, AnsiTerminal, CaptureBuffer, Color, InputEvent, KeyCode, ScriptItem, Session, TerminalSize,
    OPEN_SEQUENCE,
};
use cellui::demo::{run_gallery, GalleryExit, RunConfig};
use cellui::events::HandlerRegistry;
use cellui::geometry::Rect;
use cellui::render::{Cell, FrameBuffer, GlyphSet};

const SIZE: TerminalSize = TerminalSize { cols: 80, rows: 24 };

/// Screen model driven by CUP, SGR (16 colors), ED 2 and DECTCEM.
struct Vt {
    cols: usize,
    rows: usize,
    cells: Vec<Cell>,
    x: usize,
    y: usize,
    fg: Color,
    bg: Color,
    cursor_shown: bool,
}

const NORMAL: [Color; 8] =
    [Color::Black, Color::Red, Color::Green, Color::Brown, Color::Blue, Color::Magenta, Color::Cyan, Color::Grey];
const BRIGHT: [Color; 8] = [
    Color::DarkGrey,
    Color::LightRed,
    Color::LightGreen,
    Color::Yellow,
    Color::LightBlue,
    Color::LightMagenta,
    Color::LightCyan,
    Color::White,
];

impl Vt {
    fn new(size: TerminalSize) -> Vt {
        let (cols, rows) = (size.cols as usize, size.rows as usize);
        let blank = Cell { glyph: ' ', fg: Color::Grey, bg: Color::Black };
        Vt { cols, rows, cells: vec![blank; cols * rows], x: 0, y: 0, fg: Color::Grey, bg: Color::Black, cursor_shown: true }
    }

    fn feed(&mut self, bytes: &[u8]) {
        let text = std::str::from_utf8(bytes).expect("output is UTF-8");
        let mut chars = text.chars().peekable();
        while let Some(c) = chars.next() {
            if c != '\x1b' {
                assert!(!c.is_control(), "stray control character {c:?}");
                if self.x < self.cols && self.y < self.rows {
                    self.cells[self.y * self.cols + self.x] = Cell { glyph: c, fg: self.fg, bg: self.bg };
                }
                self.x += 1;
                continue;
            }
            assert_eq!(chars.next(), Some('['), "only CSI sequences are expected");
            let private = chars.peek() == Some(&'?');
            if private {
                chars.next();
            }
            let mut params = String::new();
            let fin = loop {
                let c = chars.next().expect("unterminated CSI");
                if c.is_ascii_digit() || c == ';' {
                    params.push(c);
                } else {
                    break c;
                }
            };
            let nums: Vec<u32> = params.split(';').filter(|p| !p.is_empty()).map(|p| p.parse().unwrap()).collect();
            match (private, fin) {
                (true, 'h') | (true, 'l') => {
                    if nums == [25] {
                        self.cursor_shown = fin == 'h';
                    }
                }
                (false, 'H') => {
                    self.y = nums.first().copied().unwrap_or(1) as usize - 1;
                    self.x = nums.get(1).copied().unwrap_or(1) as usize - 1;
                }
                (false, 'J') => {
                    assert_eq!(nums, [2]);
                    let blank = Cell { glyph: ' ', fg: self.fg, bg: self.bg };
                    self.cells.iter_mut().for_each(|c| *c = blank);
                }
                (false, 'm') => {
                    for n in nums {
                        match n {
                            0 => (self.fg, self.bg) = (Color::Grey, Color::Black),
                            30..=37 => self.fg = NORMAL[(n - 30) as usize],
                            90..=97 => self.fg = BRIGHT[(n - 90) as usize],
                            40..=47 => self.bg = NORMAL[(n - 40) as usize],
                            100..=107 => self.bg = BRIGHT[(n - 100) as usize],
                            _ => panic!("unexpected SGR {n}"),
                        }
                    }
                }
                other => panic!("unexpected sequence {other:?} {params}"),
            }
        }
    }

    fn cursor(&self) -> Option<(i32, i32)> {
        self.cursor_shown.then_some((self.x as i32 + 1, self.y as i32 + 1))
    }
}

fn ansi_session(size: TerminalSize) -> (Session, CaptureBuffer) {
    let cap = CaptureBuffer::new();
    (Session::from_ansi(AnsiTerminal::with_writer(Box::new(cap.clone()), size)), cap)
}

#[test]
fn open_sequence_leaves_a_blank_white_on_black_screen() {
    let mut vt = Vt::new(SIZE);
    vt.feed(OPEN_SEQUENCE.as_bytes());
    assert!(vt.cells.iter().all(|c| *c == Cell::BLANK));
    assert_eq!(vt.cursor(), None);
}

#[test]
fn random_batches_match_the_headless_grid() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let (mut ansi, cap) = ansi_session(SIZE);
    let mut headless = Session::headless(SIZE);
    let mut fb_a = FrameBuffer::new(SIZE);
    let mut fb_h = FrameBuffer::new(SIZE);
    let mut vt = Vt::new(SIZE);
    for _ in 0..300 {
        let glyphs = if rng.gen() { GlyphSet::Ascii } else { GlyphSet::Unicode };
        for fb in [&mut fb_a, &mut fb_h] {
            fb.set_glyphs(glyphs);
        }
        for _ in 0..rng.gen_range(1..6) {
            let r = Rect::new(rng.gen_range(-3..80), rng.gen_range(-3..24), rng.gen_range(0..30), rng.gen_range(0..10));
            let fg = Color::ALL[rng.gen_range(0..16)];
            let bg = Color::ALL[rng.gen_range(0..16)];
            let op = rng.gen_range(0..3);
            let glyph = ['a', 'Z', '#', '.', 'é'][rng.gen_range(0..5)];
            for fb in [&mut fb_a, &mut fb_h] {
                match op {
                    0 => fb.fill_rect(r, glyph, fg, bg),
                    1 => {
                        let _ = fb.draw_border(r, cellui::render::BorderStyle::Double, fg, bg);
                    }
                    _ => {
                        let _ = fb.put_text(r.x, r.y, "Hello, wire", fg, bg);
                    }
                }
            }
        }
        let cursor = rng.gen_bool(0.3).then(|| (rng.gen_range(1..=80), rng.gen_range(1..=24)));
        fb_a.set_cursor(cursor);
        fb_h.set_cursor(cursor);
        let sa = fb_a.flush(&mut ansi).unwrap();
        let sh = fb_h.flush(&mut headless).unwrap();
        assert_eq!(sa, sh);
        vt.feed(&cap.take());
        let snap = headless.snapshot().unwrap();
        assert_eq!(vt.cells.as_slice(), snap.cells());
        assert_eq!(vt.cursor(), snap.cursor());
    }
}

/// Runs the gallery on both backends with the same keys.
fn compare_gallery(keys: &[KeyCode], glyphs: GlyphSet) {
    let cfg = RunConfig { demo: None, glyphs };

    let mut headless = Session::headless(SIZE);
    headless
        .headless_mut()
        .unwrap()
        .push_script(keys.iter().map(|&k| ScriptItem::Event(InputEvent::Key(k))));
    let mut fb = FrameBuffer::new(SIZE);
    let exit_h = run_gallery(&mut headless, &mut fb, &HandlerRegistry::new_shared(), &cfg).unwrap();

    let (mut ansi, cap) = ansi_session(SIZE);
    let bytes: Vec<u8> = keys.iter().flat_map(|&k| encode_key(k)).collect();
    ansi.ansi_mut().unwrap().feed_input(&bytes);
    let mut fb = FrameBuffer::new(SIZE);
    let exit_a = run_gallery(&mut ansi, &mut fb, &HandlerRegistry::new_shared(), &cfg).unwrap();

    assert_eq!(exit_h, GalleryExit::InputExhausted);
    assert_eq!(exit_a, exit_h);
    let mut vt = Vt::new(SIZE);
    vt.feed(&cap.contents());
    let snap = headless.snapshot().unwrap();
    assert_eq!(vt.cells.as_slice(), snap.cells(), "screens differ:\n{}", snap.text());
    assert_eq!(vt.cursor(), snap.cursor());
}

#[test]
fn window_demo_matches_over_the_wire() {
    use KeyCode::*;
    compare_gallery(&[Char('4'), F(12), Tab, F(12), Tab, Char('h'), Char('i'), F(12), Down, Down], GlyphSet::Ascii);
}

#[test]
fn tabs_and_menus_match_over_the_wire_with_unicode_glyphs() {
    use KeyCode::*;
    compare_gallery(&[Char('8'), F(11), F(11), Tab, Space, F(10), Right, Right, Right, Right, Down], GlyphSet::Unicode);
}

#[test]
fn form_demo_matches_over_the_wire() {
    use KeyCode::*;
    compare_gallery(&[Char('1'), Char('A'), Char('d'), Tab, Char('x'), Tab, Space, Tab, Tab, Down], GlyphSet::Ascii);
}
