//! Editable table control.
//!
//! Layout inside the border, top to bottom: the header row and a dash
//! separator (only when some column has a title), then the data rows.
//! Left to right: the right-aligned row-number column, a one-space gap,
//! then the data columns separated by single spaces.
//!
//! Navigation repaints only the old and new cells plus the row numbers when
//! the row changes. Editing runs a modal loop over the selected cell.

use crate::backend::{InputEvent, KeyCode, MouseKind};
use crate::events::{ClickVerdict, ModalCx, ModalInput, ModalOutcome};
use crate::geometry::Rect;
use crate::render::{fixed_width, BorderStyle, FrameBuffer};
use crate::widgets::{theme, widget_boilerplate, Response, TextBoxState, Widget, WidgetBase};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridColumn {
    pub title: Option<String>,
    pub width: usize,
}

impl GridColumn {
    /// Width is raised to at least 1.
    pub fn new(title: &str, width: usize) -> GridColumn {
        GridColumn { title: Some(title.to_string()), width: width.max(1) }
    }

    pub fn untitled(width: usize) -> GridColumn {
        GridColumn { title: None, width: width.max(1) }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridMode {
    Navigate,
    Edit,
}

/// Result of a press on the grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridClick {
    Selected,
    EditStarted,
    Ignored,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EditResult {
    Committed,
    Cancelled,
}

/// Table data, selection and scroll position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridState {
    columns: Vec<GridColumn>,
    rows: Vec<Vec<String>>,
    pub show_row_numbers: bool,
    cur_row: usize,
    cur_col: usize,
    scroll_top: usize,
    mode: GridMode,
    edit: Option<TextBoxState>,
}

impl GridState {
    /// Rows are padded or truncated to the column count. Panics without columns.
    pub fn new(columns: Vec<GridColumn>, rows: Vec<Vec<String>>) -> GridState {
        assert!(!columns.is_empty(), "a grid needs at least one column");
        let n = columns.len();
        let rows = rows
            .into_iter()
            .map(|mut r| {
                r.resize(n, String::new());
                r
            })
            .collect();
        GridState {
            columns,
            rows,
            show_row_numbers: true,
            cur_row: 0,
            cur_col: 0,
            scroll_top: 0,
            mode: GridMode::Navigate,
            edit: None,
        }
    }

    pub fn columns(&self) -> &[GridColumn] {
        &self.columns
    }

    pub fn rows(&self) -> &[Vec<String>] {
        &self.rows
    }

    pub fn cell_text(&self, row: usize, col: usize) -> Option<&str> {
        self.rows.get(row)?.get(col).map(String::as_str)
    }

    pub fn set_cell(&mut self, row: usize, col: usize, text: &str) {
        if let Some(c) = self.rows.get_mut(row).and_then(|r| r.get_mut(col)) {
            *c = text.to_string();
        }
    }

    /// `(row, col)`, 0-based.
    pub fn selection(&self) -> (usize, usize) {
        (self.cur_row, self.cur_col)
    }

    pub fn scroll_top(&self) -> usize {
        self.scroll_top
    }

    pub fn mode(&self) -> GridMode {
        self.mode
    }

    pub fn edit_buffer(&self) -> Option<&TextBoxState> {
        self.edit.as_ref()
    }

    pub fn has_header(&self) -> bool {
        self.columns.iter().any(|c| c.title.is_some())
    }

    /// Width of the row-number column: enough digits for the last row.
    pub fn row_number_width(&self) -> i32 {
        if !self.show_row_numbers {
            return 0;
        }
        self.rows.len().max(1).to_string().len() as i32
    }

    fn header_rows(&self) -> i32 {
        if self.has_header() {
            2
        } else {
            0
        }
    }

    /// Number of data rows that fit in `rect`.
    pub fn page_rows(&self, rect: Rect) -> usize {
        (rect.h - 2 - self.header_rows()).max(0) as usize
    }

    fn data_x(&self, rect: Rect) -> i32 {
        let rn = self.row_number_width();
        rect.x + 1 + if rn > 0 { rn + 1 } else { 0 }
    }

    pub fn column_x(&self, rect: Rect, col: usize) -> i32 {
        self.data_x(rect) + self.columns[..col].iter().map(|c| c.width as i32 + 1).sum::<i32>()
    }

    fn row_y(&self, rect: Rect, row: usize) -> Option<i32> {
        if row < self.scroll_top || row >= self.scroll_top + self.page_rows(rect) {
            return None;
        }
        Some(rect.y + 1 + self.header_rows() + (row - self.scroll_top) as i32)
    }

    /// Screen rect of a data cell, if its row is scrolled into view.
    pub fn cell_rect(&self, rect: Rect, row: usize, col: usize) -> Option<Rect> {
        let y = self.row_y(rect, row)?;
        let c = self.columns.get(col)?;
        Some(Rect::new(self.column_x(rect, col), y, c.width as i32, 1))
    }

    pub fn row_number_rect(&self, rect: Rect, row: usize) -> Option<Rect> {
        let rn = self.row_number_width();
        if rn == 0 {
            return None;
        }
        Some(Rect::new(rect.x + 1, self.row_y(rect, row)?, rn, 1))
    }

    /// All visible data rows, including the row-number column.
    pub fn data_region(&self, rect: Rect) -> Rect {
        Rect::new(rect.x + 1, rect.y + 1 + self.header_rows(), rect.w - 2, self.page_rows(rect) as i32)
    }

    /// Length of the dash row under the header.
    pub fn separator_len(&self) -> i32 {
        let rn = self.row_number_width();
        let cols: i32 = self.columns.iter().map(|c| c.width as i32).sum::<i32>() + self.columns.len() as i32 - 1;
        if rn > 0 {
            rn + 1 + cols
        } else {
            cols
        }
    }

    /// Cell whose glyphs cover screen position `(x, y)`.
    pub fn cell_at(&self, rect: Rect, x: i32, y: i32) -> Option<(usize, usize)> {
        let first = rect.y + 1 + self.header_rows();
        if y < first || y >= first + self.page_rows(rect) as i32 || x >= rect.right() {
            return None;
        }
        let row = self.scroll_top + (y - first) as usize;
        if row >= self.rows.len() {
            return None;
        }
        let col = (0..self.columns.len()).find(|&c| {
            let cx = self.column_x(rect, c);
            x >= cx && x < cx + self.columns[c].width as i32
        })?;
        Some((row, col))
    }

    fn select(&mut self, rect: Rect, row: usize, col: usize) -> Vec<Rect> {
        let (old_row, old_col) = (self.cur_row, self.cur_col);
        if (row, col) == (old_row, old_col) {
            return Vec::new();
        }
        self.cur_row = row;
        self.cur_col = col;
        let page = self.page_rows(rect).max(1);
        let before = self.scroll_top;
        if row < self.scroll_top {
            self.scroll_top = row;
        } else if row >= self.scroll_top + page {
            self.scroll_top = row + 1 - page;
        }
        if self.scroll_top != before {
            return vec![self.data_region(rect)];
        }
        let mut out = self.cell_and_number(rect, old_row, old_col);
        out.extend(self.cell_and_number(rect, row, col));
        if row == old_row {
            out.retain(|r| Some(*r) != self.row_number_rect(rect, row));
        }
        out
    }

    fn cell_and_number(&self, rect: Rect, row: usize, col: usize) -> Vec<Rect> {
        self.cell_rect(rect, row, col).into_iter().chain(self.row_number_rect(rect, row)).collect()
    }

    /// Moves the selection. Returns the screen rects to repaint.
    pub fn navigate(&mut self, rect: Rect, key: KeyCode) -> Vec<Rect> {
        if self.mode != GridMode::Navigate || self.rows.is_empty() {
            return Vec::new();
        }
        let last_row = self.rows.len() - 1;
        let last_col = self.columns.len() - 1;
        let page = self.page_rows(rect).max(1);
        let (r, c) = (self.cur_row, self.cur_col);
        let (r, c) = match key {
            KeyCode::Up => (r.saturating_sub(1), c),
            KeyCode::Down => ((r + 1).min(last_row), c),
            KeyCode::Left => (r, c.saturating_sub(1)),
            KeyCode::Right => (r, (c + 1).min(last_col)),
            KeyCode::KeyPgUp => (r.saturating_sub(page), c),
            KeyCode::KeyPgDown => ((r + page).min(last_row), c),
            KeyCode::Home => (r, 0),
            KeyCode::End => (r, last_col),
            _ => return Vec::new(),
        };
        self.select(rect, r, c)
    }

    /// Handles a press at screen position `(x, y)`. Returns the outcome and
    /// the rects to repaint.
    pub fn click(&mut self, rect: Rect, x: i32, y: i32, verdict: ClickVerdict) -> (GridClick, Vec<Rect>) {
        if self.mode != GridMode::Navigate || !verdict.accepted() {
            return (GridClick::Ignored, Vec::new());
        }
        let Some((row, col)) = self.cell_at(rect, x, y) else {
            return (GridClick::Ignored, Vec::new());
        };
        if (row, col) == (self.cur_row, self.cur_col) {
            self.begin_edit();
            return (GridClick::EditStarted, Vec::new());
        }
        (GridClick::Selected, self.select(rect, row, col))
    }

    /// Enters EDIT mode on the selected cell with the cursor at the end.
    pub fn begin_edit(&mut self) -> bool {
        let Some(text) = self.cell_text(self.cur_row, self.cur_col) else { return false };
        let mut tb = TextBoxState::new(text);
        tb.scroll_to_cursor(self.columns[self.cur_col].width);
        self.edit = Some(tb);
        self.mode = GridMode::Edit;
        true
    }

    /// Leaves EDIT mode, writing the buffer back on commit.
    pub fn end_edit(&mut self, commit: bool) -> EditResult {
        self.mode = GridMode::Navigate;
        match self.edit.take() {
            Some(tb) if commit => {
                let (r, c) = (self.cur_row, self.cur_col);
                self.set_cell(r, c, &tb.text());
                EditResult::Committed
            }
            _ => EditResult::Cancelled,
        }
    }

    fn edit_key(&mut self, key: KeyCode) {
        let w = self.columns[self.cur_col].width;
        if let Some(tb) = self.edit.as_mut() {
            tb.handle_key(key, w);
        }
    }

    fn edit_click(&mut self, col: i32) {
        let w = self.columns[self.cur_col].width;
        if let Some(tb) = self.edit.as_mut() {
            tb.click(col, w);
        }
    }

    /// Paints the grid into `rect`; nothing is drawn outside it.
    pub fn draw(&self, fb: &mut FrameBuffer, rect: Rect, focused: bool) {
        fb.with_clip(rect, |fb| self.draw_clipped(fb, rect, focused));
    }

    fn draw_clipped(&self, fb: &mut FrameBuffer, rect: Rect, focused: bool) {
        let body = theme::FRAME;
        fb.fill_rect(rect, ' ', body.fg, body.bg);
        let _ = fb.draw_border(rect, BorderStyle::Single, body.fg, body.bg);
        let inner = rect.inset(1);
        if inner.is_empty() {
            return;
        }
        fb.with_clip(inner, |fb| {
            let rn = self.row_number_width();
            if self.has_header() {
                let y = inner.y;
                if rn > 0 {
                    fb.put_str(inner.x, y, &format!("{:>w$}", "#", w = rn as usize), theme::GRID_HEADER);
                }
                for (c, col) in self.columns.iter().enumerate() {
                    let title = col.title.as_deref().unwrap_or("");
                    fb.put_str(self.column_x(rect, c), y, &fixed_width(title, col.width), theme::GRID_HEADER);
                }
                fb.hline(inner.x, y + 1, self.separator_len(), '-', body);
            }
            for row in self.scroll_top..self.rows.len() {
                let Some(y) = self.row_y(rect, row) else { break };
                if rn > 0 {
                    let style = if row == self.cur_row { theme::SELECTED } else { body };
                    fb.put_str(inner.x, y, &format!("{:>w$}", row + 1, w = rn as usize), style);
                }
                for (c, col) in self.columns.iter().enumerate() {
                    let style = match (row == self.cur_row && c == self.cur_col, focused) {
                        (true, true) => theme::SELECTED_FOCUSED,
                        (true, false) => theme::SELECTED,
                        _ => body,
                    };
                    fb.put_str(self.column_x(rect, c), y, &fixed_width(&self.rows[row][c], col.width), style);
                }
            }
            if let (Some(tb), Some(cell)) = (&self.edit, self.cell_rect(rect, self.cur_row, self.cur_col)) {
                fb.put_str(cell.x, cell.y, &fixed_width(&tb.visible(cell.w as usize), cell.w as usize), theme::FIELD);
            }
        });
    }
}

/// Table widget around a [`GridState`]. ENTER or a second click on the
/// selected cell edits it.
pub struct Grid {
    base: WidgetBase,
    state: GridState,
}

impl Grid {
    pub fn new(rect: Rect, state: GridState) -> Grid {
        Grid { base: WidgetBase::new(rect, true), state }
    }

    pub fn state(&self) -> &GridState {
        &self.state
    }

    /// Mutable state; the whole grid is repainted.
    pub fn state_mut(&mut self) -> &mut GridState {
        self.base.invalidate();
        &mut self.state
    }

    fn damage(&mut self, rects: Vec<Rect>) {
        for r in rects {
            self.base.invalidate_rect(r);
        }
    }

    fn edit_cursor(&self) -> Option<(i32, i32)> {
        let tb = self.state.edit.as_ref()?;
        let cell = self.state.cell_rect(self.base.rect, self.state.cur_row, self.state.cur_col)?;
        Some((cell.x + tb.cursor_column() - 1, cell.y))
    }
}

impl Widget for Grid {
    widget_boilerplate!("Grid");

    fn draw(&self, fb: &mut FrameBuffer, focused: bool) {
        self.state.draw(fb, self.base.rect, focused);
    }

    fn handle_key(&mut self, key: KeyCode) -> Response {
        if key == KeyCode::Enter {
            return if self.state.begin_edit() { Response::Modal } else { Response::Handled };
        }
        let before = self.state.selection();
        let rects = self.state.navigate(self.base.rect, key);
        if rects.is_empty() && !is_nav_key(key) {
            return Response::Ignored;
        }
        self.damage(rects);
        if before != self.state.selection() {
            Response::Changed
        } else {
            Response::Handled
        }
    }

    fn handle_mouse(&mut self, x: i32, y: i32, verdict: ClickVerdict) -> Response {
        let (sx, sy) = self.base.to_screen(x, y);
        let (outcome, rects) = self.state.click(self.base.rect, sx, sy, verdict);
        self.damage(rects);
        match outcome {
            GridClick::Selected => Response::Changed,
            GridClick::EditStarted => Response::Modal,
            GridClick::Ignored if !verdict.accepted() => Response::Rejected,
            GridClick::Ignored => Response::Handled,
        }
    }

    fn focus_changed(&mut self, _focused: bool) {
        let r = self.state.cell_rect(self.base.rect, self.state.cur_row, self.state.cur_col);
        self.damage(r.into_iter().collect());
    }

    fn cursor(&self) -> Option<(i32, i32)> {
        self.edit_cursor()
    }

    fn run_modal(&mut self, cx: &mut ModalCx<'_>) -> ModalOutcome {
        let mut outcome = ModalOutcome::default();
        if self.state.mode != GridMode::Edit && !self.state.begin_edit() {
            return outcome;
        }
        let rect = self.base.rect;
        let clip = self.base.visible_rect();
        let Some(cell) = self.state.cell_rect(rect, self.state.cur_row, self.state.cur_col) else {
            self.state.end_edit(false);
            return outcome;
        };
        let before = self.state.cell_text(self.state.cur_row, self.state.cur_col).map(str::to_string);
        let result = loop {
            if let Some(tb) = &self.state.edit {
                let text = fixed_width(&tb.visible(cell.w as usize), cell.w as usize);
                cx.fb.with_clip(clip, |fb| fb.put_str(cell.x, cell.y, &text, theme::FIELD));
            }
            let cur = self.edit_cursor().filter(|&(x, y)| clip.contains(x, y));
            cx.fb.set_cursor(cur);
            let ev = match cx.next_input() {
                ModalInput::Event(ev, _) => ev,
                ModalInput::Exhausted => break self.state.end_edit(true),
            };
            match ev {
                InputEvent::Key(KeyCode::Enter) => break self.state.end_edit(true),
                InputEvent::Key(KeyCode::Esc) => break self.state.end_edit(false),
                InputEvent::Key(k) => self.state.edit_key(k),
                InputEvent::Mouse(m) if m.kind == MouseKind::Press => {
                    if cell.intersect(&clip).contains(m.x, m.y) {
                        self.state.edit_click(m.x - cell.x + 1);
                    } else {
                        outcome.reinject = Some(ev);
                        break self.state.end_edit(true);
                    }
                }
                _ => {}
            }
        };
        cx.fb.set_cursor(None);
        let after = self.state.cell_text(self.state.cur_row, self.state.cur_col).map(str::to_string);
        outcome.changed = result == EditResult::Committed && before != after;
        cx.redraw(cell, Some(&*self));
        outcome
    }
}

fn is_nav_key(key: KeyCode) -> bool {
    matches!(
        key,
        KeyCode::Up
            | KeyCode::Down
            | KeyCode::Left
            | KeyCode::Right
            | KeyCode::KeyPgUp
            | KeyCode::KeyPgDown
            | KeyCode::Home
            | KeyCode::End
    )
}
