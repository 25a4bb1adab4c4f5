//! A text-mode UI toolkit.

pub mod backend;
pub mod geometry;
pub mod render;
pub mod events;
pub mod nav;
pub mod widgets;
pub mod winmgr;
pub mod grid;
pub mod tree;
pub mod demo;
