//! The demo gallery: a numbered main menu and eight demo screens, plus
//! headless replay of input scripts with snapshot files.
//!
//! Demos only build screens and register handlers; every input loop lives
//! in the library.

mod app;
pub mod data;
mod main_menu;
mod screens;

use thiserror::Error;

use crate::backend::TerminalSize;
use crate::events::{EventsError, Registry, Screen, ScriptError};

pub use app::{replay, run_gallery, write_snapshots, GalleryExit, ReplayReport, RunConfig};
pub use main_menu::{build_main_menu, ChoiceList, MAIN_TITLE, PROMPT};
pub use screens::{
    build_controls_demo, build_form_demo, build_grid_demo, build_menu_demo, build_menu_tabs_demo,
    build_tabs_demo, build_tree_demo, build_windows_demo, FormIds, StatusLine, WindowsIds,
};

#[derive(Debug, Error)]
pub enum DemoError {
    #[error("no demo numbered {0}")]
    UnknownDemo(u8),
    #[error(transparent)]
    Events(#[from] EventsError),
    #[error(transparent)]
    Script(#[from] ScriptError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type BuildFn = fn(&Registry, TerminalSize) -> Result<Screen, DemoError>;

pub struct DemoEntry {
    pub number: u8,
    pub title: &'static str,
    pub build: BuildFn,
}

/// Main-menu entries 1-8 in order; entry 9 is Exit.
pub const DEMOS: [DemoEntry; 8] = [
    DemoEntry { number: 1, title: "Form Demo", build: build_form_demo },
    DemoEntry { number: 2, title: "Grid/Table Demo", build: build_grid_demo },
    DemoEntry { number: 3, title: "Menu Bar Demo", build: build_menu_demo },
    DemoEntry { number: 4, title: "Window Manager Demo", build: build_windows_demo },
    DemoEntry { number: 5, title: "Tree View Demo", build: build_tree_demo },
    DemoEntry { number: 6, title: "Tab Control Demo", build: build_tabs_demo },
    DemoEntry { number: 7, title: "Controls Demo", build: build_controls_demo },
    DemoEntry { number: 8, title: "Menu + Tabs Demo", build: build_menu_tabs_demo },
];

pub const EXIT_CHOICE: u8 = 9;

/// Builds demo `n` (1-8).
pub fn build_demo(n: u8, registry: &Registry, size: TerminalSize) -> Result<Screen, DemoError> {
    let entry = DEMOS.iter().find(|d| d.number == n).ok_or(DemoError::UnknownDemo(n))?;
    (entry.build)(registry, size)
}

/// The nine main-menu lines, "1. Form Demo" through "9. Exit".
pub fn menu_lines() -> Vec<String> {
    DEMOS
        .iter()
        .map(|d| format!("{}. {}", d.number, d.title))
        .chain(std::iter::once(format!("{EXIT_CHOICE}. Exit")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::events::HandlerRegistry;

    #[test]
    fn nine_contiguous_entries() {
        let lines = menu_lines();
        assert_eq!(lines.len(), 9);
        for (i, l) in lines.iter().enumerate() {
            assert!(l.starts_with(&format!("{}. ", i + 1)));
        }
    }

    #[test]
    fn unknown_demo_numbers_are_rejected() {
        let reg = HandlerRegistry::new_shared();
        for n in [0, 9, 10] {
            assert!(matches!(build_demo(n, &reg, TerminalSize::new(80, 24)), Err(DemoError::UnknownDemo(_))));
        }
    }

    #[test]
    fn every_demo_builds_and_tears_down_cleanly() {
        let reg = HandlerRegistry::new_shared();
        for d in &DEMOS {
            let scr = build_demo(d.number, &reg, TerminalSize::new(80, 24)).unwrap();
            drop(scr);
            assert_eq!(reg.borrow().len(), 0, "demo {} leaked handlers", d.number);
        }
    }
}
