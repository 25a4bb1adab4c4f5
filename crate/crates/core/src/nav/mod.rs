//! Navigation chrome: the menu bar with nested drop-downs, tab controls,
//! and popup save/restore.

mod menu;
mod popup;
mod tabs;

pub use menu::{Menu, MenuAction, MenuBar, MenuItem, MenuNav, MenuPath, MenuResult, MenuStep};
pub use popup::{popup_close, popup_open, PopupSnapshot};
pub use tabs::{cycle_tabs, switch_tab, TabControl};
