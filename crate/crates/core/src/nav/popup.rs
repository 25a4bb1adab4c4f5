use crate::events::Screen;
use crate::geometry::Rect;
use crate::render::{Cell, FrameBuffer};

/// Back-buffer cells saved from under a popup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PopupSnapshot {
    region: Rect,
    saved: Vec<Cell>,
}

impl PopupSnapshot {
    pub fn region(&self) -> Rect {
        self.region
    }

    /// Writes the saved cells back.
    pub fn restore(&self, fb: &mut FrameBuffer) {
        fb.restore_region(self.region, &self.saved);
    }
}

/// Saves the cells a popup at `region` is about to cover.
pub fn popup_open(fb: &FrameBuffer, region: Rect) -> PopupSnapshot {
    let region = region.intersect(&fb.bounds());
    PopupSnapshot { region, saved: fb.copy_region(region) }
}

/// Restores the saved cells, then lets widgets under the popup repaint
/// in case they changed while covered.
pub fn popup_close(fb: &mut FrameBuffer, snap: PopupSnapshot, scr: &mut Screen) -> usize {
    snap.restore(fb);
    scr.damage_redraw(fb, snap.region)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::backend::{Color, TerminalSize};

    #[test]
    fn nested_popups_restore_in_reverse() {
        let mut fb = FrameBuffer::new(TerminalSize::new(10, 5));
        fb.put_text(1, 1, "abcdefghij", Color::White, Color::Black).unwrap();
        let before = fb.back_cells().to_vec();
        let a = popup_open(&fb, Rect::new(2, 1, 4, 3));
        fb.fill_rect(a.region(), '#', Color::Black, Color::Grey);
        let b = popup_open(&fb, Rect::new(4, 1, 5, 2));
        fb.fill_rect(b.region(), '%', Color::Black, Color::Grey);
        b.restore(&mut fb);
        a.restore(&mut fb);
        assert_eq!(fb.back_cells(), &before[..]);
    }
}
