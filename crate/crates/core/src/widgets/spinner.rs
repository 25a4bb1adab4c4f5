use crate::backend::KeyCode;
use crate::events::ClickVerdict;
use crate::geometry::Rect;
use crate::render::FrameBuffer;

use super::{theme, widget_boilerplate, Response, Widget, WidgetBase};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpinnerAction {
    Inc,
    Dec,
    /// Replace the value with typed text.
    Edit(String),
}

/// Bounded integer with a step. `min <= value <= max` always holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpinnerState {
    value: i64,
    min: i64,
    max: i64,
    step: i64,
}

impl SpinnerState {
    /// Panics if `min > max` or `step < 1`.
    pub fn new(value: i64, min: i64, max: i64, step: i64) -> SpinnerState {
        assert!(min <= max && step >= 1, "invalid spinner range");
        SpinnerState { value: value.clamp(min, max), min, max, step }
    }

    pub fn value(&self) -> i64 {
        self.value
    }

    pub fn min(&self) -> i64 {
        self.min
    }

    pub fn max(&self) -> i64 {
        self.max
    }

    /// Whether `text` is acceptable EDIT input: digits, with a leading
    /// minus only when the range allows negatives.
    pub fn accepts(&self, text: &str) -> bool {
        let digits = match text.strip_prefix('-') {
            Some(rest) if self.min < 0 => rest,
            Some(_) => return false,
            None => text,
        };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    }

    pub fn apply(&mut self, action: &SpinnerAction) -> Response {
        let new = match action {
            SpinnerAction::Inc => self.value.saturating_add(self.step),
            SpinnerAction::Dec => self.value.saturating_sub(self.step),
            SpinnerAction::Edit(text) => {
                if !self.accepts(text) {
                    return Response::Rejected;
                }
                // only digits remain, so a parse failure means overflow
                text.parse::<i64>().unwrap_or(if text.starts_with('-') { i64::MIN } else { i64::MAX })
            }
        };
        let new = new.clamp(self.min, self.max);
        if new == self.value {
            return Response::Handled;
        }
        self.value = new;
        Response::Changed
    }
}

/// `[-] value [+]`. UP/DOWN step; typing digits edits, ENTER commits.
pub struct Spinner {
    base: WidgetBase,
    state: SpinnerState,
    editing: Option<String>,
}

impl Spinner {
    pub fn new(x: i32, y: i32, width: i32, state: SpinnerState) -> Spinner {
        Spinner { base: WidgetBase::new(Rect::new(x, y, width.max(9), 1), true), state, editing: None }
    }

    pub fn state(&self) -> &SpinnerState {
        &self.state
    }

    pub fn value(&self) -> i64 {
        self.state.value
    }

    pub fn apply(&mut self, action: &SpinnerAction) -> Response {
        let r = self.state.apply(action);
        if r == Response::Changed {
            self.base.invalidate();
        }
        r
    }

    fn field_width(&self) -> usize {
        (self.base.rect.w - 8).max(1) as usize
    }

    fn commit(&mut self) -> Response {
        match self.editing.take() {
            Some(text) => {
                self.base.invalidate();
                match self.apply(&SpinnerAction::Edit(text)) {
                    Response::Rejected => Response::Handled,
                    r => r,
                }
            }
            None => Response::Ignored,
        }
    }
}

impl Widget for Spinner {
    widget_boilerplate!("Spinner");

    fn draw(&self, fb: &mut FrameBuffer, focused: bool) {
        let r = self.base.rect;
        let fw = self.field_width();
        let shown = match &self.editing {
            Some(t) => format!("{t:<fw$}"),
            None => format!("{:>fw$}", self.state.value),
        };
        let shown: String = shown.chars().rev().take(fw).collect::<Vec<_>>().into_iter().rev().collect();
        fb.fill_rect(r, ' ', theme::LABEL.fg, theme::LABEL.bg);
        fb.put_str(r.x, r.y, "[-]", theme::BUTTON);
        fb.put_str(r.x + 4, r.y, &shown, theme::focused(theme::FIELD, focused));
        fb.put_str(r.right() - 2, r.y, "[+]", theme::BUTTON);
    }

    fn handle_key(&mut self, key: KeyCode) -> Response {
        match key {
            KeyCode::Up | KeyCode::Char('+') => {
                self.editing = None;
                self.apply(&SpinnerAction::Inc)
            }
            KeyCode::Down => {
                self.editing = None;
                self.apply(&SpinnerAction::Dec)
            }
            KeyCode::Enter => self.commit(),
            KeyCode::Esc if self.editing.is_some() => {
                self.editing = None;
                self.base.invalidate();
                Response::Handled
            }
            KeyCode::Backspace => {
                if let Some(t) = &mut self.editing {
                    t.pop();
                    self.base.invalidate();
                }
                Response::Handled
            }
            KeyCode::Char(c) if c.is_ascii_digit() || c == '-' => {
                let mut next = self.editing.clone().unwrap_or_default();
                next.push(c);
                // keystroke filter: the partial text must stay a numeric prefix
                let ok = (next == "-" && self.state.min < 0) || self.state.accepts(&next);
                if !ok {
                    return Response::Rejected;
                }
                self.editing = Some(next);
                self.base.invalidate();
                Response::Handled
            }
            KeyCode::Char(_) | KeyCode::Space => Response::Rejected,
            _ => Response::Ignored,
        }
    }

    fn handle_mouse(&mut self, x: i32, _y: i32, verdict: ClickVerdict) -> Response {
        let w = self.base.rect.w;
        let action = if x <= 3 {
            SpinnerAction::Dec
        } else if x >= w - 2 {
            SpinnerAction::Inc
        } else {
            return Response::Handled;
        };
        if !verdict.accepted() {
            return Response::Rejected;
        }
        self.editing = None;
        self.apply(&action)
    }

    fn focus_changed(&mut self, focused: bool) {
        if !focused {
            self.commit();
        }
    }

    fn cursor(&self) -> Option<(i32, i32)> {
        let t = self.editing.as_ref()?;
        let col = t.chars().count().min(self.field_width() - 1) as i32;
        Some((self.base.rect.x + 4 + col, self.base.rect.y))
    }
}
