//! Navigate the people table, edit a cell and commit it.

use cellui::backend::{Session, TerminalSize};
use cellui::demo::build_grid_demo;
use cellui::events::{parse_script, run, HandlerRegistry};
use cellui::render::{FrameBuffer, GlyphSet};

const SCRIPT: &str = "\
SNAP start
KEY DOWN
KEY DOWN
KEY RIGHT
KEY ENTER
KEY BACKSPACE
KEY BACKSPACE
CHAR 9
CHAR 9
KEY ENTER
SNAP edited
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let size = TerminalSize::new(80, 24);
    let registry = HandlerRegistry::new_shared();
    let mut scr = build_grid_demo(&registry, size)?;
    let mut session = Session::headless(size);
    session.headless_mut().expect("headless").push_script(parse_script(SCRIPT)?);
    let mut fb = FrameBuffer::new(size);
    fb.set_glyphs(GlyphSet::Ascii);
    run(&mut scr, &mut session, &mut fb);
    for (name, snap) in session.headless_mut().expect("headless").take_snaps() {
        println!("== {name} ==");
        print!("{}", snap.text());
    }
    Ok(())
}
