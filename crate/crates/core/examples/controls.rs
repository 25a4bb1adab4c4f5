//! Progress bars, spinners and scroll bars.

use cellui::backend::{Session, TerminalSize};
use cellui::demo::build_controls_demo;
use cellui::events::{parse_script, run, HandlerRegistry};
use cellui::render::{FrameBuffer, GlyphSet};

const SCRIPT: &str = "\
SNAP start
KEY TAB
KEY UP
KEY UP
KEY TAB
KEY RIGHT
KEY RIGHT
KEY RIGHT
SNAP adjusted
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let size = TerminalSize::new(80, 24);
    let registry = HandlerRegistry::new_shared();
    let mut scr = build_controls_demo(&registry, size)?;
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
