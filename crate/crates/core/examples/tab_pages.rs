//! Switch tab pages with F11 and move focus inside a page with TAB.

use cellui::backend::{Session, TerminalSize};
use cellui::demo::build_tabs_demo;
use cellui::events::{parse_script, run, HandlerRegistry};
use cellui::render::{FrameBuffer, GlyphSet};

const SCRIPT: &str = "\
SNAP general
KEY F11
SNAP appearance
KEY TAB
KEY SPACE
KEY F11
KEY F11
SNAP about
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let size = TerminalSize::new(80, 24);
    let registry = HandlerRegistry::new_shared();
    let mut scr = build_tabs_demo(&registry, size)?;
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
