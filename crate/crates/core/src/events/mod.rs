//! Event dispatch: the screen model, the main loop and the plumbing for
//! library-owned modal loops.
//!
//! Application code builds a [`Screen`], registers widgets and handlers,
//! and calls [`run`]. It never polls input itself.

mod click;
mod registry;
mod screen;
pub mod script;

use std::collections::VecDeque;

use log::{debug, error};
use thiserror::Error;

use crate::backend::{BackendError, InputEvent, KeyCode, MouseButton, MouseKind, Session};
use crate::geometry::Rect;
use crate::render::FrameBuffer;
use crate::widgets::{Response, Widget};

pub use click::{ClickFilter, ClickVerdict, DEFAULT_DEBOUNCE_MS, DEFAULT_DOUBLE_CLICK_MS};
pub use registry::{
    EventKind, GlobalHook, Handler, HandlerRegistration, HandlerRegistry, Registry, ScreenId,
};
pub use screen::Screen;
pub use script::{parse_script, ScriptError};

/// Poll timeout of the loops; a timeout yields [`InputEvent::Tick`].
pub const TICK_MS: u64 = 30;

/// Screen-local widget handle. Ids are never reused within a screen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WidgetId(pub u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitReason {
    UserEscape,
    /// A handler called [`Screen::request_exit`].
    Requested(i32),
    /// A headless script ran out.
    InputExhausted,
    BackendFailure,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EventsError {
    #[error("widget is already registered")]
    AlreadyRegistered,
    #[error("no widget with id {0:?}")]
    UnknownWidget(WidgetId),
    #[error("widget {0:?} cannot hold children")]
    NotAContainer(WidgetId),
}

/// What a modal loop hands back to the loop that started it.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ModalOutcome {
    /// CHANGE handlers should fire.
    pub changed: bool,
    /// An event the modal loop did not consume, to be processed by the caller.
    pub reinject: Option<InputEvent>,
    /// Extra screen area to repaint.
    pub damage: Option<Rect>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModalInput {
    /// Event plus the session clock when it arrived.
    Event(InputEvent, u64),
    /// Script finished or the backend failed; the modal loop should return.
    Exhausted,
}

/// Access a modal loop gets to the screen, the terminal and the frame buffer.
///
/// While a widget runs its modal loop it is taken out of the screen;
/// [`redraw`](ModalCx::redraw) paints it from the reference passed in.
pub struct ModalCx<'a> {
    pub screen: &'a mut Screen,
    pub session: &'a mut Session,
    pub fb: &'a mut FrameBuffer,
    pub me: Option<WidgetId>,
}

impl<'a> ModalCx<'a> {
    pub fn new(screen: &'a mut Screen, session: &'a mut Session, fb: &'a mut FrameBuffer, me: Option<WidgetId>) -> Self {
        ModalCx { screen, session, fb, me }
    }

    pub fn flush(&mut self) {
        if let Err(e) = self.fb.flush(self.session) {
            error!("flush failed in modal loop: {e}");
        }
    }

    /// Flushes, then waits for the next event. Decode errors are skipped.
    pub fn next_input(&mut self) -> ModalInput {
        self.flush();
        loop {
            match self.session.poll_input(TICK_MS) {
                Ok(Some(ev)) => return ModalInput::Event(ev, self.session.now_ms()),
                Ok(None) if self.session.input_exhausted() => return ModalInput::Exhausted,
                Ok(None) => continue,
                Err(BackendError::Decode(e)) => debug!("skipping undecodable input: {e}"),
                Err(e) => {
                    error!("backend failure in modal loop: {e}");
                    return ModalInput::Exhausted;
                }
            }
        }
    }

    /// Repaints every screen widget intersecting `r`, clipped to `r`.
    pub fn redraw(&mut self, r: Rect, me: Option<&dyn Widget>) -> usize {
        let stand_in = self.me.zip(me);
        self.screen.damage_redraw_with(self.fb, r, stand_in)
    }

    pub fn filter_click(&mut self, t_ms: u64) -> ClickVerdict {
        match self.me {
            Some(id) => self.screen.filter_click(id, t_ms),
            None => ClickVerdict::AcceptSingle,
        }
    }
}

/// Runs the main loop of `scr` until ESC, an exit request, the end of a
/// headless script, or a backend failure.
pub fn run(scr: &mut Screen, session: &mut Session, fb: &mut FrameBuffer) -> ExitReason {
    if fb.size() != session.size() {
        fb.resize(session.size());
    }
    scr.resize(session.size());
    scr.ensure_focus();
    loop {
        if let Some(reason) = scr.take_exit() {
            return reason;
        }
        scr.redraw_dirty(fb);
        fb.set_cursor(scr.cursor());
        if let Err(e) = fb.flush(session) {
            error!("flush failed: {e}");
            return ExitReason::BackendFailure;
        }
        let ev = match scr.pop_pending() {
            Some(ev) => ev,
            None => match session.poll_input(TICK_MS) {
                Ok(Some(ev)) => ev,
                Ok(None) if session.input_exhausted() => return ExitReason::InputExhausted,
                Ok(None) => InputEvent::Tick,
                Err(BackendError::Decode(e)) => {
                    debug!("skipping undecodable input: {e}");
                    continue;
                }
                Err(e) => {
                    error!("backend failure: {e}");
                    return ExitReason::BackendFailure;
                }
            },
        };
        dispatch(scr, session, fb, ev);
    }
}

/// Processes one event exactly as the main loop would.
pub fn dispatch(scr: &mut Screen, session: &mut Session, fb: &mut FrameBuffer, ev: InputEvent) {
    match ev {
        InputEvent::Key(key) => dispatch_key(scr, session, fb, key),
        InputEvent::Mouse(m) if m.button == MouseButton::Left => match m.kind {
            MouseKind::Press => dispatch_press(scr, session, fb, m.x, m.y),
            MouseKind::Release => crate::winmgr::finish_drag(scr, m.x, m.y),
        },
        InputEvent::Mouse(_) => {}
        InputEvent::Resize(size) => {
            fb.resize(size);
            scr.resize(size);
            scr.request_full_redraw();
        }
        InputEvent::Tick => {}
    }
}

fn dispatch_key(scr: &mut Screen, session: &mut Session, fb: &mut FrameBuffer, key: KeyCode) {
    let hook = scr.registry().borrow_mut().hook_for(scr.id(), key);
    match hook {
        Some(GlobalHook::MenuBar) => {
            run_menubar(scr, session, fb, None);
            return;
        }
        Some(GlobalHook::CycleTabs) => {
            crate::nav::cycle_tabs(scr);
            return;
        }
        Some(GlobalHook::CycleWindows) => {
            crate::winmgr::cycle_windows(scr);
            return;
        }
        None => {}
    }
    match key {
        KeyCode::Tab => {
            scr.focus_next(1);
            return;
        }
        KeyCode::BackTab => {
            scr.focus_next(-1);
            return;
        }
        _ => {}
    }
    let ev = InputEvent::Key(key);
    let Some(id) = scr.focus() else {
        if key == KeyCode::Esc {
            scr.request_exit_reason(ExitReason::UserEscape);
        }
        return;
    };
    let resp = scr.with_widget(id, |w| w.handle_key(key)).unwrap_or(Response::Ignored);
    scr.fire(id, EventKind::Key, &ev);
    if key == KeyCode::Esc && resp == Response::Ignored {
        scr.request_exit_reason(ExitReason::UserEscape);
        return;
    }
    apply_response(scr, session, fb, id, resp, &ev);
}

fn dispatch_press(scr: &mut Screen, session: &mut Session, fb: &mut FrameBuffer, x: i32, y: i32) {
    if scr.menubar_hit(x, y) {
        run_menubar(scr, session, fb, Some(x));
        return;
    }
    let ev = InputEvent::Mouse(crate::backend::MouseEvent::press(x, y));
    if let Some(top) = scr.hit_test(x, y) {
        crate::winmgr::raise_for(scr, top);
    }
    let Some((id, lx, ly)) = scr.route_mouse(x, y) else {
        return;
    };
    let verdict = scr.filter_click(id, session.now_ms());
    let resp = scr.with_widget(id, |w| w.handle_mouse(lx, ly, verdict)).unwrap_or(Response::Ignored);
    apply_response(scr, session, fb, id, resp, &ev);
}

/// Acts on a widget's [`Response`]: fires handlers, runs modal loops,
/// switches tabs, forwards window commands.
pub(crate) fn apply_response(
    scr: &mut Screen,
    session: &mut Session,
    fb: &mut FrameBuffer,
    id: WidgetId,
    resp: Response,
    ev: &InputEvent,
) {
    match resp {
        Response::Changed => scr.fire(id, EventKind::Change, ev),
        Response::Clicked => scr.fire(id, EventKind::Click, ev),
        Response::Modal => run_widget_modal(scr, session, fb, id, ev),
        Response::SwitchTab(page) => crate::nav::switch_tab(scr, id, page),
        Response::Window(hit) => crate::winmgr::window_hit(scr, id, hit),
        Response::Taskbar(win) => crate::winmgr::taskbar_click(scr, win),
        Response::Ignored | Response::Handled | Response::Rejected => {}
    }
}

fn run_widget_modal(scr: &mut Screen, session: &mut Session, fb: &mut FrameBuffer, id: WidgetId, ev: &InputEvent) {
    // Bring the screen up to date so the modal loop starts from what is shown.
    scr.redraw_dirty(fb);
    let Some(mut w) = scr.take_widget(id) else {
        return;
    };
    let outcome = {
        let mut cx = ModalCx::new(scr, session, fb, Some(id));
        w.run_modal(&mut cx)
    };
    scr.put_widget(id, w);
    if let Some(r) = outcome.damage {
        scr.damage(r);
    }
    if outcome.changed {
        scr.fire(id, EventKind::Change, ev);
    }
    if let Some(next) = outcome.reinject {
        scr.post_event(next);
    }
}

fn run_menubar(scr: &mut Screen, session: &mut Session, fb: &mut FrameBuffer, click_x: Option<i32>) {
    scr.redraw_dirty(fb);
    let Some(mut mb) = scr.take_menubar() else {
        return;
    };
    let result = {
        let mut cx = ModalCx::new(scr, session, fb, None);
        mb.run(&mut cx, click_x)
    };
    scr.put_menubar(mb);
    if let Some(path) = result.activated {
        let action = scr.menubar().and_then(|m| m.action_at(&path));
        if let Some(action) = action {
            action(scr, &path);
        }
    }
    if let Some(next) = result.reinject {
        scr.post_event(next);
    }
}

pub(crate) type PendingQueue = VecDeque<InputEvent>;
