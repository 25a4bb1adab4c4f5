//! Replay an input script against the whole demo gallery and print each SNAP.

use cellui::backend::TerminalSize;
use cellui::demo::{replay, RunConfig};
use cellui::render::GlyphSet;

fn typed(text: &str) -> String {
    text.chars().map(|c| if c == ' ' { "KEY SPACE\n".to_string() } else { format!("CHAR {c}\n") }).collect()
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let script = format!(
        "SNAP main_menu\nCHAR 1\n{}KEY TAB\n{}SNAP form\nKEY ESC\nSNAP back\n",
        typed("Ada Lovelace"),
        typed("ada@example.org")
    );
    let cfg = RunConfig { demo: None, glyphs: GlyphSet::Ascii };
    let report = replay(&script, TerminalSize::new(80, 24), &cfg)?;
    for (name, snap) in &report.snaps {
        println!("== {name} ==");
        print!("{}", snap.text());
    }
    println!("exit: {:?}", report.exit);
    Ok(())
}
