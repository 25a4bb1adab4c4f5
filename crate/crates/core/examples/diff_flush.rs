//! Double-buffered drawing: only changed cells reach the terminal.

use cellui::backend::{Color, Session, TerminalSize};
use cellui::geometry::Rect;
use cellui::render::{BorderStyle, FrameBuffer};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let size = TerminalSize::new(40, 8);
    let mut session = Session::headless(size);
    let mut fb = FrameBuffer::new(size);

    fb.draw_border(Rect::new(1, 1, 40, 8), BorderStyle::Single, Color::White, Color::Blue)?;
    fb.put_text(3, 3, "first frame", Color::Yellow, Color::Black)?;
    println!("first flush:  {:?}", fb.flush(&mut session)?);

    // Unchanged frames cost nothing.
    println!("second flush: {:?}", fb.flush(&mut session)?);

    fb.put_text(3, 3, "first fRame", Color::Yellow, Color::Black)?;
    println!("one glyph:    {:?}", fb.flush(&mut session)?);

    print!("{}", session.snapshot()?.text());
    Ok(())
}
