//! Tree view with expand/collapse glyphs.
//!
//! Rows are the preorder flattening of the nodes, descending only into
//! expanded parents. Moving the selection repaints the old and new rows;
//! expanding or collapsing repaints from the toggled row down.

use thiserror::Error;

use crate::backend::KeyCode;
use crate::events::ClickVerdict;
use crate::geometry::Rect;
use crate::render::{fixed_width, BorderStyle, FrameBuffer};
use crate::widgets::{theme, widget_boilerplate, Response, Widget, WidgetBase};

/// Cells of indent per depth level.
pub const INDENT: usize = 2;
/// Width of the "[+] " / "[-] " slot.
pub const GLYPH_W: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeNode {
    pub label: String,
    pub children: Vec<TreeNode>,
    pub expanded: bool,
}

impl TreeNode {
    pub fn leaf(label: &str) -> TreeNode {
        TreeNode { label: label.to_string(), children: Vec::new(), expanded: false }
    }

    /// Collapsed parent.
    pub fn branch(label: &str, children: Vec<TreeNode>) -> TreeNode {
        TreeNode { label: label.to_string(), children, expanded: false }
    }

    pub fn expanded(mut self) -> TreeNode {
        self.expanded = true;
        self
    }

    pub fn has_children(&self) -> bool {
        !self.children.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("node has no children")]
    NotAParent,
    #[error("row {0} is not visible")]
    NoSuchRow(usize),
}

/// One visible row: the child-index path to the node, and its depth.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatRow {
    pub path: Vec<usize>,
    pub depth: usize,
}

/// Preorder rows of `roots`, descending only into expanded nodes.
pub fn flatten(roots: &[TreeNode]) -> Vec<FlatRow> {
    fn walk(nodes: &[TreeNode], prefix: &mut Vec<usize>, out: &mut Vec<FlatRow>) {
        for (i, n) in nodes.iter().enumerate() {
            prefix.push(i);
            out.push(FlatRow { path: prefix.clone(), depth: prefix.len() - 1 });
            if n.expanded {
                walk(&n.children, prefix, out);
            }
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    walk(roots, &mut Vec::new(), &mut out);
    out
}

fn node_at<'a>(roots: &'a [TreeNode], path: &[usize]) -> Option<&'a TreeNode> {
    let (first, rest) = path.split_first()?;
    rest.iter().try_fold(roots.get(*first)?, |n, &i| n.children.get(i))
}

fn node_at_mut<'a>(roots: &'a mut [TreeNode], path: &[usize]) -> Option<&'a mut TreeNode> {
    let (first, rest) = path.split_first()?;
    rest.iter().try_fold(roots.get_mut(*first)?, |n, &i| n.children.get_mut(i))
}

/// Which view rows need repainting, as 0-based indices into the visible list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RepaintRows {
    None,
    Rows(Vec<usize>),
    /// From this visible row to the bottom of the viewport.
    From(usize),
    All,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeState {
    roots: Vec<TreeNode>,
    rows: Vec<FlatRow>,
    current: usize,
    scroll_top: usize,
}

impl TreeState {
    pub fn new(roots: Vec<TreeNode>) -> TreeState {
        let rows = flatten(&roots);
        TreeState { roots, rows, current: 0, scroll_top: 0 }
    }

    pub fn roots(&self) -> &[TreeNode] {
        &self.roots
    }

    pub fn rows(&self) -> &[FlatRow] {
        &self.rows
    }

    pub fn current(&self) -> usize {
        self.current
    }

    pub fn scroll_top(&self) -> usize {
        self.scroll_top
    }

    pub fn node(&self, row: usize) -> Option<&TreeNode> {
        node_at(&self.roots, &self.rows.get(row)?.path)
    }

    pub fn label(&self, row: usize) -> Option<&str> {
        self.node(row).map(|n| n.label.as_str())
    }

    /// Rendered text of a visible row: indent, glyph slot, label.
    pub fn row_text(&self, row: usize) -> Option<String> {
        let r = self.rows.get(row)?;
        let n = self.node(row)?;
        let glyph = match (n.has_children(), n.expanded) {
            (false, _) => "    ",
            (true, false) => "[+] ",
            (true, true) => "[-] ",
        };
        Some(format!("{}{}{}", " ".repeat(r.depth * INDENT), glyph, n.label))
    }

    fn scroll_into_view(&mut self, view_rows: usize) -> bool {
        let view = view_rows.max(1);
        let before = self.scroll_top;
        if self.current < self.scroll_top {
            self.scroll_top = self.current;
        } else if self.current >= self.scroll_top + view {
            self.scroll_top = self.current + 1 - view;
        }
        let max_top = self.rows.len().saturating_sub(view);
        self.scroll_top = self.scroll_top.min(max_top);
        before != self.scroll_top
    }

    /// Selects visible row `row`.
    pub fn select(&mut self, row: usize, view_rows: usize) -> RepaintRows {
        if row >= self.rows.len() || row == self.current {
            return RepaintRows::None;
        }
        let old = self.current;
        self.current = row;
        if self.scroll_into_view(view_rows) {
            RepaintRows::All
        } else {
            RepaintRows::Rows(vec![old, row])
        }
    }

    /// UP/DOWN/HOME/END/PgUp/PgDn. Other keys do nothing.
    pub fn navigate(&mut self, key: KeyCode, view_rows: usize) -> RepaintRows {
        if self.rows.is_empty() {
            return RepaintRows::None;
        }
        let last = self.rows.len() - 1;
        let page = view_rows.max(1);
        let target = match key {
            KeyCode::Up => self.current.saturating_sub(1),
            KeyCode::Down => (self.current + 1).min(last),
            KeyCode::Home => 0,
            KeyCode::End => last,
            KeyCode::KeyPgUp => self.current.saturating_sub(page),
            KeyCode::KeyPgDown => (self.current + page).min(last),
            _ => return RepaintRows::None,
        };
        self.select(target, view_rows)
    }

    /// Expands or collapses the node on visible row `row`.
    pub fn toggle(&mut self, row: usize, view_rows: usize) -> Result<RepaintRows, TreeError> {
        let path = self.rows.get(row).ok_or(TreeError::NoSuchRow(row))?.path.clone();
        let node = node_at_mut(&mut self.roots, &path).ok_or(TreeError::NoSuchRow(row))?;
        if !node.has_children() {
            return Err(TreeError::NotAParent);
        }
        node.expanded = !node.expanded;
        let current_path = self.rows[self.current].path.clone();
        self.rows = flatten(&self.roots);
        // A collapsed ancestor takes over the selection of a hidden row.
        let mut p = current_path;
        self.current = loop {
            if let Some(i) = self.rows.iter().position(|r| r.path == p) {
                break i;
            }
            p.pop();
            if p.is_empty() {
                break 0;
            }
        };
        if self.scroll_into_view(view_rows) {
            return Ok(RepaintRows::All);
        }
        Ok(RepaintRows::From(row))
    }

    /// Column range (0-based, within the text) of the glyph on `row`.
    pub fn glyph_span(&self, row: usize) -> Option<(usize, usize)> {
        let r = self.rows.get(row)?;
        self.node(row).filter(|n| n.has_children())?;
        let start = r.depth * INDENT;
        Some((start, start + 3))
    }
}

/// Widget around a [`TreeState`], bordered.
pub struct TreeView {
    base: WidgetBase,
    state: TreeState,
}

impl TreeView {
    pub fn new(rect: Rect, roots: Vec<TreeNode>) -> TreeView {
        TreeView { base: WidgetBase::new(rect, true), state: TreeState::new(roots) }
    }

    pub fn state(&self) -> &TreeState {
        &self.state
    }

    fn inner(&self) -> Rect {
        self.base.rect.inset(1)
    }

    fn view_rows(&self) -> usize {
        self.inner().h.max(0) as usize
    }

    /// Screen rect of visible row `row`, if scrolled into view.
    pub fn row_rect(&self, row: usize) -> Option<Rect> {
        let inner = self.inner();
        if row < self.state.scroll_top || row >= self.state.scroll_top + self.view_rows() {
            return None;
        }
        Some(inner.row(inner.y + (row - self.state.scroll_top) as i32))
    }

    fn damage(&mut self, rows: RepaintRows) {
        let inner = self.inner();
        match rows {
            RepaintRows::None => {}
            RepaintRows::All => self.base.invalidate_rect(inner),
            RepaintRows::Rows(rs) => {
                for r in rs {
                    if let Some(rect) = self.row_rect(r) {
                        self.base.invalidate_rect(rect);
                    }
                }
            }
            RepaintRows::From(r) => {
                let y = self.row_rect(r).map_or(inner.y, |rr| rr.y);
                self.base.invalidate_rect(Rect::from_corners(inner.x, y, inner.right(), inner.bottom()));
            }
        }
    }

    fn toggle_current(&mut self) -> Response {
        let view = self.view_rows();
        match self.state.toggle(self.state.current, view) {
            Ok(rows) => {
                self.damage(rows);
                Response::Changed
            }
            Err(_) => Response::Handled,
        }
    }
}

impl Widget for TreeView {
    widget_boilerplate!("TreeView");

    fn draw(&self, fb: &mut FrameBuffer, focused: bool) {
        let r = self.base.rect;
        fb.fill_rect(r, ' ', theme::FRAME.fg, theme::FRAME.bg);
        let _ = fb.draw_border(r, BorderStyle::Single, theme::FRAME.fg, theme::FRAME.bg);
        let inner = self.inner();
        fb.with_clip(inner, |fb| {
            for row in self.state.scroll_top..self.state.rows.len() {
                let Some(rr) = self.row_rect(row) else { break };
                let style = match (row == self.state.current, focused) {
                    (true, true) => theme::SELECTED_FOCUSED,
                    (true, false) => theme::SELECTED,
                    _ => theme::FRAME,
                };
                let text = self.state.row_text(row).unwrap_or_default();
                fb.put_str(rr.x, rr.y, &fixed_width(&text, rr.w as usize), style);
            }
        });
    }

    fn handle_key(&mut self, key: KeyCode) -> Response {
        let current = self.state.current;
        let expanded = self.state.node(current).map(|n| n.expanded);
        match key {
            KeyCode::Enter | KeyCode::Space => self.toggle_current(),
            KeyCode::Char('+') if expanded == Some(false) => self.toggle_current(),
            KeyCode::Char('-') if expanded == Some(true) => self.toggle_current(),
            KeyCode::Char('+' | '-') => Response::Handled,
            _ => {
                let rows = self.state.navigate(key, self.view_rows());
                match rows {
                    RepaintRows::None => match key {
                        KeyCode::Up | KeyCode::Down | KeyCode::Home | KeyCode::End | KeyCode::KeyPgUp | KeyCode::KeyPgDown => {
                            Response::Handled
                        }
                        _ => Response::Ignored,
                    },
                    rows => {
                        self.damage(rows);
                        Response::Changed
                    }
                }
            }
        }
    }

    fn handle_mouse(&mut self, x: i32, y: i32, verdict: ClickVerdict) -> Response {
        let inner = self.inner();
        let (sx, sy) = self.base.to_screen(x, y);
        if !inner.contains(sx, sy) {
            return Response::Handled;
        }
        let row = self.state.scroll_top + (sy - inner.y) as usize;
        if row >= self.state.rows.len() {
            return Response::Handled;
        }
        let col = (sx - inner.x) as usize;
        let on_glyph = self.state.glyph_span(row).is_some_and(|(a, b)| col >= a && col < b);
        if on_glyph {
            if !verdict.accepted() {
                return Response::Rejected;
            }
            // toggling in place keeps the repaint below the clicked row
            return match self.state.toggle(row, self.view_rows()) {
                Ok(rows) => {
                    self.damage(rows);
                    Response::Changed
                }
                Err(_) => Response::Handled,
            };
        }
        let sel = self.state.select(row, self.view_rows());
        if sel == RepaintRows::None {
            return Response::Handled;
        }
        self.damage(sel);
        Response::Changed
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc() -> Vec<TreeNode> {
        vec![
            TreeNode::branch("A", vec![TreeNode::branch("B", vec![TreeNode::leaf("D")]).expanded()]).expanded(),
            TreeNode::leaf("C"),
        ]
    }

    fn depths(t: &TreeState) -> Vec<(String, usize)> {
        (0..t.rows().len()).map(|i| (t.label(i).unwrap().to_string(), t.rows()[i].depth)).collect()
    }

    #[test]
    fn flatten_is_preorder_through_expanded_nodes() {
        let t = TreeState::new(abc());
        let want: Vec<(String, usize)> = [("A", 0), ("B", 1), ("D", 2), ("C", 0)].iter().map(|(s, d)| (s.to_string(), *d)).collect();
        assert_eq!(depths(&t), want);
    }

    #[test]
    fn collapsed_root_hides_children() {
        let t = TreeState::new(vec![TreeNode::branch("A", vec![TreeNode::leaf("B")])]);
        assert_eq!(t.rows().len(), 1);
    }

    #[test]
    fn down_repaints_two_rows() {
        let mut t = TreeState::new(abc());
        assert_eq!(t.navigate(KeyCode::Down, 10), RepaintRows::Rows(vec![0, 1]));
        assert_eq!(t.navigate(KeyCode::Home, 10), RepaintRows::Rows(vec![1, 0]));
        assert_eq!(t.navigate(KeyCode::Up, 10), RepaintRows::None);
    }

    #[test]
    fn toggle_leaf_is_an_error() {
        let mut t = TreeState::new(abc());
        assert_eq!(t.toggle(2, 10), Err(TreeError::NotAParent));
    }

    #[test]
    fn collapsing_an_ancestor_moves_the_selection_to_it() {
        let mut t = TreeState::new(abc());
        t.select(2, 10);
        assert_eq!(t.toggle(0, 10), Ok(RepaintRows::From(0)));
        assert_eq!(t.current(), 0);
        assert_eq!(t.rows().len(), 2);
    }

    #[test]
    fn toggling_twice_restores_rows() {
        let mut t = TreeState::new(abc());
        let before = t.rows().to_vec();
        t.toggle(1, 10).unwrap();
        t.toggle(1, 10).unwrap();
        assert_eq!(t.rows(), &before[..]);
    }

    #[test]
    fn row_text_indents_by_depth() {
        let t = TreeState::new(abc());
        assert_eq!(t.row_text(0).unwrap(), "[-] A");
        assert_eq!(t.row_text(1).unwrap(), "  [-] B");
        assert_eq!(t.row_text(2).unwrap(), "        D");
        assert_eq!(t.row_text(3).unwrap(), "    C");
    }
}
