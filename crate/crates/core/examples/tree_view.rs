//! Collapse and expand tree nodes from the keyboard and the mouse.

use cellui::backend::{Session, TerminalSize};
use cellui::demo::build_tree_demo;
use cellui::events::{parse_script, run, HandlerRegistry};
use cellui::render::{FrameBuffer, GlyphSet};

const SCRIPT: &str = "\
SNAP start
KEY DOWN
KEY ENTER
SNAP collapsed
WAIT 1000
MOUSE PRESS LEFT 4 5
MOUSE RELEASE LEFT 4 5
SNAP clicked
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let size = TerminalSize::new(80, 24);
    let registry = HandlerRegistry::new_shared();
    let mut scr = build_tree_demo(&registry, size)?;
    let mut session = Session::headless(size);
    session.headless_mut().expect("headless").push_script(parse_script(SCRIPT)?);
    let mut fb = FrameBuffer::new(size);
    fb.set_glyphs(GlyphSet::Unicode);
    run(&mut scr, &mut session, &mut fb);
    for (name, snap) in session.headless_mut().expect("headless").take_snaps() {
        println!("== {name} ==");
        print!("{}", snap.text());
    }
    Ok(())
}
