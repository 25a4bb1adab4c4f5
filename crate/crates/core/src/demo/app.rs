use std::path::Path;

use log::info;

use crate::backend::{GridSnapshot, Session, TerminalSize};
use crate::events::{parse_script, run, ExitReason, HandlerRegistry, Registry};
use crate::render::{FrameBuffer, GlyphSet};

use super::{build_demo, build_main_menu, DemoError, EXIT_CHOICE};

/// How the gallery session is set up.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RunConfig {
    /// Open this demo first instead of the main menu (9 exits at once).
    pub demo: Option<u8>,
    pub glyphs: GlyphSet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GalleryExit {
    /// Exit chosen from the main menu, or ESC on it.
    Quit,
    /// The headless script ran out.
    InputExhausted,
    BackendFailure,
}

/// Runs the main menu and the demos it launches until the user quits.
pub fn run_gallery(
    session: &mut Session,
    fb: &mut FrameBuffer,
    registry: &Registry,
    cfg: &RunConfig,
) -> Result<GalleryExit, DemoError> {
    fb.set_glyphs(cfg.glyphs);
    let mut next = cfg.demo;
    loop {
        let size = session.size();
        let choice = match next.take() {
            Some(n) => n,
            None => {
                let mut menu = build_main_menu(registry, size)?;
                match run(&mut menu, session, fb) {
                    ExitReason::Requested(n) => n as u8,
                    ExitReason::UserEscape => return Ok(GalleryExit::Quit),
                    ExitReason::InputExhausted => return Ok(GalleryExit::InputExhausted),
                    ExitReason::BackendFailure => return Ok(GalleryExit::BackendFailure),
                }
            }
        };
        if choice == EXIT_CHOICE {
            return Ok(GalleryExit::Quit);
        }
        info!("opening demo {choice}");
        let mut scr = build_demo(choice, registry, session.size())?;
        let reason = run(&mut scr, session, fb);
        drop(scr);
        match reason {
            ExitReason::InputExhausted => return Ok(GalleryExit::InputExhausted),
            ExitReason::BackendFailure => return Ok(GalleryExit::BackendFailure),
            ExitReason::UserEscape | ExitReason::Requested(_) => {}
        }
    }
}

/// Outcome of a headless replay.
#[derive(Debug, Clone)]
pub struct ReplayReport {
    pub exit: GalleryExit,
    /// `SNAP` captures in script order.
    pub snaps: Vec<(String, GridSnapshot)>,
    /// Terminal contents when the run ended.
    pub last: GridSnapshot,
}

/// Feeds `script` through the gallery on a headless terminal of `size`.
pub fn replay(script: &str, size: TerminalSize, cfg: &RunConfig) -> Result<ReplayReport, DemoError> {
    let items = parse_script(script)?;
    let mut session = Session::headless(size);
    if let Some(h) = session.headless_mut() {
        h.push_script(items);
    }
    let mut fb = FrameBuffer::new(size);
    let registry = HandlerRegistry::new_shared();
    let exit = run_gallery(&mut session, &mut fb, &registry, cfg)?;
    let h = session.headless_mut().expect("headless session");
    let snaps = h.take_snaps();
    let last = h.snapshot();
    Ok(ReplayReport { exit, snaps, last })
}

/// Writes `<name>.txt` (glyphs) and `<name>.colors` (two hex digits, fg
/// then bg, per cell) for each snapshot.
pub fn write_snapshots(dir: &Path, snaps: &[(String, GridSnapshot)]) -> Result<(), DemoError> {
    std::fs::create_dir_all(dir)?;
    for (name, snap) in snaps {
        std::fs::write(dir.join(format!("{name}.txt")), snap.text())?;
        std::fs::write(dir.join(format!("{name}.colors")), snap.color_map())?;
    }
    Ok(())
}
