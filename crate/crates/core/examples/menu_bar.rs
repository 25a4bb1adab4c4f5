//! Open nested drop-down menus from the menu bar.

use cellui::backend::{Session, TerminalSize};
use cellui::demo::build_menu_demo;
use cellui::events::{parse_script, run, HandlerRegistry};
use cellui::render::{FrameBuffer, GlyphSet};

const SCRIPT: &str = "\
KEY F10
SNAP file_menu
KEY RIGHT
KEY RIGHT
KEY RIGHT
SNAP format_menu
KEY RIGHT
SNAP font_submenu
KEY ENTER
SNAP after_select
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let size = TerminalSize::new(80, 24);
    let registry = HandlerRegistry::new_shared();
    let mut scr = build_menu_demo(&registry, size)?;
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
