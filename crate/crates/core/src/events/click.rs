use std::collections::HashMap;

use super::WidgetId;

pub const DEFAULT_DEBOUNCE_MS: u64 = 150;
pub const DEFAULT_DOUBLE_CLICK_MS: u64 = 400;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClickVerdict {
    AcceptSingle,
    AcceptDouble,
    Reject,
}

impl ClickVerdict {
    pub fn accepted(self) -> bool {
        self != ClickVerdict::Reject
    }
}

/// Per-widget click debouncing and double-click synthesis.
#[derive(Debug, Clone)]
pub struct ClickFilter {
    threshold_ms: u64,
    dclick_ms: u64,
    last_accepted: HashMap<WidgetId, u64>,
    last_widget: Option<WidgetId>,
}

impl Default for ClickFilter {
    fn default() -> ClickFilter {
        ClickFilter::new(DEFAULT_DEBOUNCE_MS, DEFAULT_DOUBLE_CLICK_MS)
    }
}

impl ClickFilter {
    /// Panics unless `0 < threshold_ms < dclick_ms`.
    pub fn new(threshold_ms: u64, dclick_ms: u64) -> ClickFilter {
        assert!(threshold_ms > 0 && threshold_ms < dclick_ms, "need 0 < threshold < double-click window");
        ClickFilter { threshold_ms, dclick_ms, last_accepted: HashMap::new(), last_widget: None }
    }

    pub fn threshold_ms(&self) -> u64 {
        self.threshold_ms
    }

    pub fn dclick_ms(&self) -> u64 {
        self.dclick_ms
    }

    pub fn filter(&mut self, widget: WidgetId, t_ms: u64) -> ClickVerdict {
        let verdict = match self.last_accepted.get(&widget) {
            Some(&last) => {
                let dt = t_ms.saturating_sub(last);
                if dt < self.threshold_ms {
                    ClickVerdict::Reject
                } else if dt <= self.dclick_ms && self.last_widget == Some(widget) {
                    ClickVerdict::AcceptDouble
                } else {
                    ClickVerdict::AcceptSingle
                }
            }
            None => ClickVerdict::AcceptSingle,
        };
        if verdict.accepted() {
            self.last_accepted.insert(widget, t_ms);
            self.last_widget = Some(widget);
        }
        verdict
    }

    pub fn forget(&mut self, widget: WidgetId) {
        self.last_accepted.remove(&widget);
        if self.last_widget == Some(widget) {
            self.last_widget = None;
        }
    }
}
