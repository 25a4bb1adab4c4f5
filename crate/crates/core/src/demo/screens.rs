use crate::backend::{InputEvent, TerminalSize};
use crate::events::{HandlerRegistration, Registry, Screen, WidgetId};
use crate::geometry::Rect;
use crate::grid::Grid;
use crate::nav::{MenuBar, MenuPath, TabControl};
use crate::tree::TreeView;
use crate::widgets::{
    theme, Button, CheckBox, ComboBox, EditBox, Label, ListBox, Orientation, ProgressBar, ScrollBar,
    ScrollBarState, Spinner, SpinnerState, TextBox,
};
use crate::winmgr::{add_window, Desktop, Window};

use super::data;
use super::DemoError;

fn title(scr: &mut Screen, y: i32, text: &str) -> Result<WidgetId, DemoError> {
    Ok(scr.register(Label::new(2, y, text).styled(theme::GRID_HEADER), &[])?)
}

fn footer(scr: &mut Screen, text: &str) -> Result<WidgetId, DemoError> {
    let y = scr.size().rows as i32 - 1;
    Ok(scr.register(Label::new(2, y, text), &[])?)
}

fn status_label(scr: &mut Screen, y: i32, text: &str) -> Result<WidgetId, DemoError> {
    let w = scr.size().cols as i32 - 4;
    Ok(scr.register(Label::with_rect(Rect::new(3, y, w, 1), text), &[])?)
}

fn set_label(scr: &mut Screen, id: WidgetId, text: &str) {
    if let Some(l) = scr.widget_mut::<Label>(id) {
        l.set_text(text);
    }
}

// ---- form -------------------------------------------------------------

/// Widget ids of the form demo, kept as screen state.
#[derive(Debug, Clone, Copy)]
pub struct FormIds {
    pub name: WidgetId,
    pub email: WidgetId,
    pub subscribe: WidgetId,
    pub terms: WidgetId,
    pub language: WidgetId,
    pub country: WidgetId,
    pub comments: WidgetId,
    pub submit: WidgetId,
    pub cancel: WidgetId,
    pub reset: WidgetId,
    pub status: WidgetId,
}

fn form_submit(scr: &mut Screen, _id: WidgetId, _ev: &InputEvent) {
    let Some(ids) = scr.state::<FormIds>().copied() else { return };
    let name = scr.widget::<TextBox>(ids.name).map(|t| t.text()).unwrap_or_default();
    let email = scr.widget::<TextBox>(ids.email).map(|t| t.text()).unwrap_or_default();
    let country = scr.widget::<ListBox>(ids.country).and_then(|l| l.selected_text().map(str::to_string));
    let mut msg = format!("Submitted: name={name} email={email}");
    if let Some(c) = country {
        msg.push_str(&format!(" country={c}"));
    }
    set_label(scr, ids.status, &msg);
}

fn form_cancel(scr: &mut Screen, _id: WidgetId, _ev: &InputEvent) {
    scr.request_exit(0);
}

fn form_reset(scr: &mut Screen, _id: WidgetId, _ev: &InputEvent) {
    let Some(ids) = scr.state::<FormIds>().copied() else { return };
    for tb in [ids.name, ids.email] {
        if let Some(t) = scr.widget_mut::<TextBox>(tb) {
            t.set_text("");
        }
    }
    for cb in [ids.subscribe, ids.terms] {
        if let Some(c) = scr.widget_mut::<CheckBox>(cb) {
            c.set_checked(false);
        }
    }
    if let Some(c) = scr.widget_mut::<ComboBox>(ids.language) {
        c.select(0);
    }
    if let Some(l) = scr.widget_mut::<ListBox>(ids.country) {
        l.select(None);
    }
    if let Some(e) = scr.widget_mut::<EditBox>(ids.comments) {
        e.set_text("");
    }
    set_label(scr, ids.status, "Form reset");
}

/// Name and email fields, two checkboxes, a language drop-down, a country
/// list, a comment box and Submit/Cancel/Reset.
pub fn build_form_demo(registry: &Registry, size: TerminalSize) -> Result<Screen, DemoError> {
    let mut scr = Screen::new(registry, size);
    title(&mut scr, 1, "Form Demo")?;
    scr.register(Label::new(3, 3, "Name:"), &[])?;
    let name = scr.register(TextBox::new(13, 3, 28), &[])?;
    scr.register(Label::new(3, 5, "Email:"), &[])?;
    let email = scr.register(TextBox::new(13, 5, 28), &[])?;
    let subscribe = scr.register(CheckBox::new(3, 7, "Subscribe to newsletter"), &[])?;
    let terms = scr.register(CheckBox::new(32, 7, "Accept terms"), &[])?;
    scr.register(Label::new(3, 9, "Language:"), &[])?;
    let language = scr.register(ComboBox::new(13, 9, 16, data::LANGUAGES), &[])?;
    scr.register(Label::new(50, 3, "Country:"), &[])?;
    let country = scr.register(ListBox::new(Rect::new(50, 4, 24, 8), data::COUNTRIES), &[])?;
    scr.register(Label::new(3, 11, "Comments:"), &[])?;
    let comments = scr.register(EditBox::new(Rect::new(3, 12, 44, 5)), &[])?;
    let submit = scr.register(Button::new(3, 18, "Submit"), &[HandlerRegistration::click(form_submit)])?;
    let cancel = scr.register(Button::new(16, 18, "Cancel"), &[HandlerRegistration::click(form_cancel)])?;
    let reset = scr.register(Button::new(29, 18, "Reset"), &[HandlerRegistration::click(form_reset)])?;
    let status = status_label(&mut scr, 20, "Ready")?;
    footer(&mut scr, "TAB: next field  Arrows: move  ENTER/SPACE/click: activate  ESC: back")?;
    scr.set_state(FormIds {
        name,
        email,
        subscribe,
        terms,
        language,
        country,
        comments,
        submit,
        cancel,
        reset,
        status,
    });
    Ok(scr)
}

// ---- grid -------------------------------------------------------------

/// The people table with row numbers.
pub fn build_grid_demo(registry: &Registry, size: TerminalSize) -> Result<Screen, DemoError> {
    let mut scr = Screen::new(registry, size);
    title(&mut scr, 1, "Grid/Table Demo")?;
    scr.register(Grid::new(Rect::new(3, 3, 62, 14), data::people_grid()), &[])?;
    footer(&mut scr, "Arrows/PgUp/PgDn/Home/End: move  ENTER or click twice: edit  ESC: back")?;
    Ok(scr)
}

// ---- menus ------------------------------------------------------------

/// Id of the label menu actions report to.
#[derive(Debug, Clone, Copy)]
pub struct StatusLine(pub WidgetId);

fn menu_selected(scr: &mut Screen, path: &MenuPath) {
    let Some(mb) = scr.menubar() else { return };
    let mut parts = vec![mb.menus[path.top()].title.clone()];
    for depth in 1..path.0.len() {
        let prefix = MenuPath(path.0[..=depth].to_vec());
        if let Some(item) = mb.item(&prefix) {
            parts.push(item.label().to_string());
        }
    }
    let text = format!("Selected: {}", parts.join(" > "));
    if let Some(StatusLine(id)) = scr.state::<StatusLine>().copied() {
        set_label(scr, id, &text);
    }
}

/// Menu bar with nested drop-downs over a page of instructions.
pub fn build_menu_demo(registry: &Registry, size: TerminalSize) -> Result<Screen, DemoError> {
    let mut scr = Screen::new(registry, size);
    scr.attach_menubar(MenuBar::new(data::demo_menus(menu_selected)));
    title(&mut scr, 3, "Menu Bar Demo")?;
    let lines = [
        "F10 or click a title: open the menu bar",
        "LEFT/RIGHT: switch menus, open or leave a submenu",
        "UP/DOWN: move   ENTER: select or toggle   ESC: close",
        "Format > Font holds typefaces, style toggles and sizes",
    ];
    for (i, l) in lines.iter().enumerate() {
        scr.register(Label::new(4, 5 + i as i32, l), &[])?;
    }
    let status = status_label(&mut scr, 12, "No selection yet")?;
    scr.set_state(StatusLine(status));
    footer(&mut scr, "F10: menu  ESC: back")?;
    Ok(scr)
}

// ---- windows ----------------------------------------------------------

#[derive(Debug, Clone, Copy)]
pub struct WindowsIds {
    pub information: WidgetId,
    pub user_form: WidgetId,
    pub select_country: WidgetId,
    pub status: WidgetId,
    pub name: WidgetId,
    pub saved: WidgetId,
}

fn user_form_save(scr: &mut Screen, _id: WidgetId, _ev: &InputEvent) {
    let Some(ids) = scr.state::<WindowsIds>().copied() else { return };
    let name = scr.widget::<TextBox>(ids.name).map(|t| t.text()).unwrap_or_default();
    set_label(scr, ids.saved, &format!("Saved {name}"));
}

/// Four windows on a desktop with a taskbar.
pub fn build_windows_demo(registry: &Registry, size: TerminalSize) -> Result<Screen, DemoError> {
    let mut scr = Screen::new(registry, size);
    Desktop::install(&mut scr)?;

    let information = add_window(&mut scr, Window::new(Rect::new(2, 2, 36, 10), "Information"))?;
    let info = [
        "Drag a title bar to move",
        "Drag the bottom-right corner",
        "  to resize",
        "[-] min  [^] max  [X] close",
        "F12: next window  TAB: next field",
        "ESC: back to the main menu",
    ];
    for (i, l) in info.iter().enumerate() {
        scr.register_child(information, Label::new(2, 1 + i as i32, l), &[])?;
    }

    let user_form = add_window(&mut scr, Window::new(Rect::new(40, 2, 38, 11), "User Form"))?;
    scr.register_child(user_form, Label::new(2, 1, "Name:"), &[])?;
    let name = scr.register_child(user_form, TextBox::new(9, 1, 25), &[])?;
    scr.register_child(user_form, Label::new(2, 3, "Email:"), &[])?;
    scr.register_child(user_form, TextBox::new(9, 3, 25), &[])?;
    scr.register_child(user_form, CheckBox::new(2, 5, "Remember me"), &[])?;
    scr.register_child(user_form, Button::new(2, 7, "Save"), &[HandlerRegistration::click(user_form_save)])?;
    let saved = scr.register_child(user_form, Label::with_rect(Rect::new(13, 7, 22, 1), ""), &[])?;

    let select_country = add_window(&mut scr, Window::new(Rect::new(2, 13, 30, 10), "Select Country"))?;
    scr.register_child(select_country, ListBox::new(Rect::new(1, 1, 28, 7), data::COUNTRIES), &[])?;

    let status = add_window(&mut scr, Window::new(Rect::new(36, 14, 40, 8), "Status"))?;
    let metrics = ["CPU:     23%", "Memory:  4.1 GB / 8.0 GB", "Disk:    120 GB free", "Network: Connected"];
    for (i, l) in metrics.iter().enumerate() {
        scr.register_child(status, Label::new(2, 1 + i as i32, l), &[])?;
    }

    scr.set_state(WindowsIds { information, user_form, select_country, status, name, saved });
    Ok(scr)
}

// ---- tree -------------------------------------------------------------

/// A file system tree and an org chart side by side.
pub fn build_tree_demo(registry: &Registry, size: TerminalSize) -> Result<Screen, DemoError> {
    let mut scr = Screen::new(registry, size);
    title(&mut scr, 1, "Tree View Demo")?;
    scr.register(Label::new(3, 3, "File System"), &[])?;
    scr.register(Label::new(42, 3, "Organization"), &[])?;
    scr.register(TreeView::new(Rect::new(3, 4, 36, 17), data::file_tree()), &[])?;
    scr.register(TreeView::new(Rect::new(42, 4, 36, 17), data::org_tree()), &[])?;
    footer(&mut scr, "UP/DOWN: move  +/-/ENTER/SPACE or click [+]/[-]: expand  TAB: tree  ESC: back")?;
    Ok(scr)
}

// ---- tabs -------------------------------------------------------------

/// Settings pages General/Appearance/Network/About.
pub fn build_tabs_demo(registry: &Registry, size: TerminalSize) -> Result<Screen, DemoError> {
    let mut scr = Screen::new(registry, size);
    title(&mut scr, 1, "Tab Control Demo")?;
    let tabs =
        scr.register(TabControl::new(Rect::new(2, 3, 76, 17), &["General", "Appearance", "Network", "About"]), &[])?;

    scr.register_in_page(tabs, 0, Label::new(2, 1, "Username:"), &[])?;
    scr.register_in_page(tabs, 0, TextBox::new(14, 1, 24).with_text("admin"), &[])?;
    scr.register_in_page(tabs, 0, Label::new(2, 3, "Language:"), &[])?;
    scr.register_in_page(tabs, 0, ComboBox::new(14, 3, 16, data::LANGUAGES), &[])?;
    scr.register_in_page(tabs, 0, CheckBox::new(2, 5, "Auto-save enabled").checked(true), &[])?;
    scr.register_in_page(tabs, 0, CheckBox::new(2, 7, "Show notifications").checked(true), &[])?;

    scr.register_in_page(tabs, 1, Label::new(2, 1, "Theme:"), &[])?;
    scr.register_in_page(tabs, 1, ComboBox::new(14, 1, 16, &["Classic", "Dark", "Light"]), &[])?;
    scr.register_in_page(tabs, 1, Label::new(2, 3, "Font size:"), &[])?;
    scr.register_in_page(tabs, 1, Spinner::new(14, 3, 11, SpinnerState::new(12, 8, 32, 1)), &[])?;
    scr.register_in_page(tabs, 1, CheckBox::new(2, 5, "Show status bar").checked(true), &[])?;

    scr.register_in_page(tabs, 2, Label::new(2, 1, "Proxy host:"), &[])?;
    scr.register_in_page(tabs, 2, TextBox::new(14, 1, 24), &[])?;
    scr.register_in_page(tabs, 2, Label::new(2, 3, "Port:"), &[])?;
    scr.register_in_page(tabs, 2, Spinner::new(14, 3, 11, SpinnerState::new(8080, 1, 65535, 1)), &[])?;
    scr.register_in_page(tabs, 2, CheckBox::new(2, 5, "Use proxy"), &[])?;

    scr.register_in_page(tabs, 3, Label::new(2, 1, "TUI Library Demo"), &[])?;
    scr.register_in_page(tabs, 3, Label::new(2, 3, "Version 0.1.0"), &[])?;
    scr.register_in_page(tabs, 3, Label::new(2, 5, "Widgets, menus, tabs and windows for text terminals"), &[])?;

    footer(&mut scr, "TAB: next control  F11 or click a tab: switch page  ESC: back")?;
    Ok(scr)
}

// ---- controls ---------------------------------------------------------

/// Three progress bars, two spinners and two scroll bars.
pub fn build_controls_demo(registry: &Registry, size: TerminalSize) -> Result<Screen, DemoError> {
    let mut scr = Screen::new(registry, size);
    title(&mut scr, 1, "Controls Demo")?;

    scr.register(Label::new(3, 3, "Progress bars").styled(theme::GRID_HEADER), &[])?;
    for (i, (label, value)) in [("Download:", 65), ("Upload:", 30), ("Processing:", 85)].iter().enumerate() {
        let y = 4 + i as i32;
        scr.register(Label::new(3, y, label), &[])?;
        let mut bar = ProgressBar::new(16, y, 40);
        bar.set_value(*value);
        scr.register(bar, &[])?;
    }

    scr.register(Label::new(3, 8, "Spinners").styled(theme::GRID_HEADER), &[])?;
    scr.register(Label::new(3, 9, "Quantity:"), &[])?;
    scr.register(Spinner::new(16, 9, 12, SpinnerState::new(5, 0, 99, 1)), &[])?;
    scr.register(Label::new(3, 10, "Percentage:"), &[])?;
    scr.register(Spinner::new(16, 10, 12, SpinnerState::new(50, 0, 100, 5)), &[])?;

    scr.register(Label::new(3, 12, "Scroll bars").styled(theme::GRID_HEADER), &[])?;
    scr.register(Label::new(3, 13, "Horizontal:"), &[])?;
    scr.register(ScrollBar::new(16, 13, 30, ScrollBarState::new(Orientation::Horizontal, 40, 0, 100)), &[])?;
    scr.register(Label::new(56, 12, "Vertical:"), &[])?;
    scr.register(ScrollBar::new(58, 13, 8, ScrollBarState::new(Orientation::Vertical, 25, 0, 100)), &[])?;

    footer(&mut scr, "TAB: focus  Arrows or click: adjust  digits+ENTER: edit a spinner  ESC: back")?;
    Ok(scr)
}

// ---- menu + tabs ------------------------------------------------------

/// A menu bar above a tab control.
pub fn build_menu_tabs_demo(registry: &Registry, size: TerminalSize) -> Result<Screen, DemoError> {
    let mut scr = Screen::new(registry, size);
    scr.attach_menubar(MenuBar::new(data::demo_menus(menu_selected)));
    title(&mut scr, 3, "Menu + Tabs Demo")?;
    let tabs = scr.register(TabControl::new(Rect::new(2, 5, 76, 14), &["Editor", "Preview", "Settings"]), &[])?;

    let mut editor = EditBox::new(Rect::new(2, 1, 70, 8));
    editor.set_text("Type here.\nF10 opens the menu bar, F11 switches tabs.");
    scr.register_in_page(tabs, 0, editor, &[])?;

    scr.register_in_page(tabs, 1, Label::new(2, 1, "Preview of the document"), &[])?;
    scr.register_in_page(tabs, 1, Label::new(2, 3, "Font: Arial 12pt"), &[])?;

    scr.register_in_page(tabs, 2, CheckBox::new(2, 1, "Word wrap").checked(true), &[])?;
    scr.register_in_page(tabs, 2, CheckBox::new(2, 3, "Auto indent"), &[])?;
    scr.register_in_page(tabs, 2, Label::new(2, 5, "Tab width:"), &[])?;
    scr.register_in_page(tabs, 2, Spinner::new(14, 5, 9, SpinnerState::new(4, 1, 8, 1)), &[])?;

    let status = status_label(&mut scr, 20, "No selection yet")?;
    scr.set_state(StatusLine(status));
    footer(&mut scr, "F10: menu  F11: next tab  TAB: next control  ESC: back")?;
    Ok(scr)
}
