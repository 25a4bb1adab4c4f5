use crate::backend::{InputEvent, KeyCode, MouseKind};
use crate::events::{ModalCx, ModalInput, Screen};
use crate::geometry::Rect;
use crate::render::{fixed_width, BorderStyle, FrameBuffer};
use crate::widgets::theme;

use super::popup::{popup_open, PopupSnapshot};

pub type MenuAction = fn(&mut Screen, &MenuPath);

#[derive(Clone)]
pub enum MenuItem {
    Action { label: String, hint: Option<String>, action: Option<MenuAction> },
    Check { label: String, hint: Option<String>, checked: bool },
    Separator,
    Submenu { label: String, children: Vec<MenuItem> },
}

impl MenuItem {
    pub fn action(label: &str) -> MenuItem {
        MenuItem::Action { label: label.to_string(), hint: None, action: None }
    }

    pub fn check(label: &str, checked: bool) -> MenuItem {
        MenuItem::Check { label: label.to_string(), hint: None, checked }
    }

    pub fn separator() -> MenuItem {
        MenuItem::Separator
    }

    /// Panics if `children` is empty.
    pub fn submenu(label: &str, children: Vec<MenuItem>) -> MenuItem {
        assert!(!children.is_empty(), "a submenu needs at least one item");
        MenuItem::Submenu { label: label.to_string(), children }
    }

    /// Display-only shortcut text shown right-aligned.
    pub fn hint(mut self, text: &str) -> MenuItem {
        match &mut self {
            MenuItem::Action { hint, .. } | MenuItem::Check { hint, .. } => *hint = Some(text.to_string()),
            _ => {}
        }
        self
    }

    pub fn on(mut self, f: MenuAction) -> MenuItem {
        if let MenuItem::Action { action, .. } = &mut self {
            *action = Some(f);
        }
        self
    }

    pub fn label(&self) -> &str {
        match self {
            MenuItem::Action { label, .. } | MenuItem::Check { label, .. } | MenuItem::Submenu { label, .. } => label,
            MenuItem::Separator => "",
        }
    }

    pub fn is_separator(&self) -> bool {
        matches!(self, MenuItem::Separator)
    }

    fn hint_text(&self) -> &str {
        match self {
            MenuItem::Action { hint: Some(h), .. } | MenuItem::Check { hint: Some(h), .. } => h,
            _ => "",
        }
    }

    pub fn children(&self) -> &[MenuItem] {
        match self {
            MenuItem::Submenu { children, .. } => children,
            _ => &[],
        }
    }
}

#[derive(Clone)]
pub struct Menu {
    pub title: String,
    pub items: Vec<MenuItem>,
}

impl Menu {
    pub fn new(title: &str, items: Vec<MenuItem>) -> Menu {
        Menu { title: title.to_string(), items }
    }
}

/// Indices from the top-level menu down to the highlighted item.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MenuPath(pub Vec<usize>);

impl MenuPath {
    pub fn top(&self) -> usize {
        self.0[0]
    }

    /// Number of open drop-downs.
    pub fn depth(&self) -> usize {
        self.0.len() - 1
    }
}

/// Result of one run of the menu loop.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MenuResult {
    pub activated: Option<MenuPath>,
    /// A click outside the menus, handed back to the screen.
    pub reinject: Option<InputEvent>,
}

/// Effect of one key on the navigation state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MenuStep {
    Moved,
    Activate(MenuPath),
    Toggled(MenuPath),
    Exit,
    Nothing,
}

/// Menu navigation state without any drawing: the highlighted top menu and
/// the highlighted item of each open drop-down.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MenuNav {
    top: usize,
    stack: Vec<usize>,
}

fn first_selectable(items: &[MenuItem]) -> usize {
    items.iter().position(|i| !i.is_separator()).unwrap_or(0)
}

/// Next non-separator index from `from` in `dir`, wrapping.
fn step_selectable(items: &[MenuItem], from: usize, dir: i32) -> usize {
    let n = items.len() as i32;
    let mut i = from as i32;
    for _ in 0..n {
        i = (i + dir).rem_euclid(n);
        if !items[i as usize].is_separator() {
            return i as usize;
        }
    }
    from
}

impl MenuNav {
    /// Top menu `top` open with its first item highlighted.
    pub fn open(menus: &[Menu], top: usize) -> MenuNav {
        let mut nav = MenuNav { top, stack: Vec::new() };
        nav.open_top(menus, top);
        nav
    }

    fn open_top(&mut self, menus: &[Menu], top: usize) {
        self.top = top;
        self.stack.clear();
        if !menus[top].items.is_empty() {
            self.stack.push(first_selectable(&menus[top].items));
        }
    }

    pub fn path(&self) -> MenuPath {
        let mut v = vec![self.top];
        v.extend(&self.stack);
        MenuPath(v)
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// Items of drop-down `level` (0 = the top menu's own list).
    pub fn items_at<'m>(&self, menus: &'m [Menu], level: usize) -> &'m [MenuItem] {
        let mut items: &[MenuItem] = &menus[self.top].items;
        for &i in &self.stack[..level] {
            items = items[i].children();
        }
        items
    }

    pub fn highlighted<'m>(&self, menus: &'m [Menu]) -> Option<&'m MenuItem> {
        let level = self.stack.len().checked_sub(1)?;
        self.items_at(menus, level).get(self.stack[level])
    }

    fn open_submenu(&mut self, menus: &[Menu]) -> bool {
        match self.highlighted(menus) {
            Some(MenuItem::Submenu { children, .. }) => {
                self.stack.push(first_selectable(children));
                true
            }
            _ => false,
        }
    }

    fn shift_top(&mut self, menus: &[Menu], dir: i32) {
        let n = menus.len() as i32;
        let next = (self.top as i32 + dir).rem_euclid(n) as usize;
        self.open_top(menus, next);
    }

    /// Sets the highlight of drop-down `level`, closing deeper ones.
    pub fn pick(&mut self, level: usize, idx: usize) {
        self.stack.truncate(level + 1);
        if let Some(slot) = self.stack.get_mut(level) {
            *slot = idx;
        }
    }

    /// Activates the highlighted item as ENTER does.
    pub fn activate(&mut self, menus: &mut [Menu]) -> MenuStep {
        let path = self.path();
        let level = match self.stack.len().checked_sub(1) {
            Some(l) => l,
            None => return MenuStep::Nothing,
        };
        let idx = self.stack[level];
        let mut items: &mut Vec<MenuItem> = &mut menus[self.top].items;
        for &i in &self.stack[..level] {
            items = match &mut items[i] {
                MenuItem::Submenu { children, .. } => children,
                _ => return MenuStep::Nothing,
            };
        }
        let step = match &mut items[idx] {
            MenuItem::Action { .. } => MenuStep::Activate(path),
            MenuItem::Check { checked, .. } => {
                *checked = !*checked;
                MenuStep::Toggled(path)
            }
            MenuItem::Submenu { .. } => MenuStep::Moved,
            MenuItem::Separator => MenuStep::Nothing,
        };
        if step == MenuStep::Moved {
            self.open_submenu(menus);
        }
        step
    }

    pub fn key(&mut self, menus: &mut [Menu], key: KeyCode) -> MenuStep {
        match key {
            KeyCode::Left => {
                if self.stack.len() >= 2 {
                    self.stack.pop();
                } else {
                    self.shift_top(menus, -1);
                }
                MenuStep::Moved
            }
            KeyCode::Right => {
                if !self.open_submenu(menus) {
                    self.shift_top(menus, 1);
                }
                MenuStep::Moved
            }
            KeyCode::Up | KeyCode::Down => {
                let Some(level) = self.stack.len().checked_sub(1) else { return MenuStep::Nothing };
                let dir = if key == KeyCode::Up { -1 } else { 1 };
                let items = self.items_at(menus, level);
                self.stack[level] = step_selectable(items, self.stack[level], dir);
                MenuStep::Moved
            }
            KeyCode::Enter | KeyCode::Space => self.activate(menus),
            KeyCode::Esc => {
                if self.stack.len() >= 2 {
                    self.stack.pop();
                    MenuStep::Moved
                } else {
                    MenuStep::Exit
                }
            }
            _ => MenuStep::Nothing,
        }
    }
}

/// Top-row menu bar. Attach it with [`Screen::attach_menubar`]; F10 or a
/// click on a title runs its modal loop.
#[derive(Clone)]
pub struct MenuBar {
    pub menus: Vec<Menu>,
    /// Navigation state of the last run, kept for inspection.
    last_nav: Option<MenuNav>,
}

struct OpenLevel {
    rect: Rect,
    snap: PopupSnapshot,
}

impl MenuBar {
    pub fn new(menus: Vec<Menu>) -> MenuBar {
        assert!(!menus.is_empty(), "a menu bar needs at least one menu");
        MenuBar { menus, last_nav: None }
    }

    pub fn bar_rect(&self, cols: i32) -> Rect {
        Rect::new(1, 1, cols, 1)
    }

    /// Screen column where title `i` starts (its leading space).
    pub fn title_x(&self, i: usize) -> i32 {
        2 + self.menus[..i].iter().map(|m| m.title.chars().count() as i32 + 2).sum::<i32>()
    }

    fn title_span(&self, i: usize) -> (i32, i32) {
        let x = self.title_x(i);
        (x, x + self.menus[i].title.chars().count() as i32 + 1)
    }

    pub fn title_at(&self, x: i32) -> Option<usize> {
        (0..self.menus.len()).find(|&i| {
            let (a, b) = self.title_span(i);
            (a..=b).contains(&x)
        })
    }

    /// Path of the item highlighted when the last run ended.
    pub fn last_path(&self) -> Option<MenuPath> {
        self.last_nav.as_ref().map(|n| n.path())
    }

    pub fn item(&self, path: &MenuPath) -> Option<&MenuItem> {
        let (&top, rest) = path.0.split_first()?;
        let mut items: &[MenuItem] = &self.menus.get(top)?.items;
        let (&last, inner) = rest.split_last()?;
        for &i in inner {
            items = items.get(i)?.children();
        }
        items.get(last)
    }

    pub fn action_at(&self, path: &MenuPath) -> Option<MenuAction> {
        match self.item(path)? {
            MenuItem::Action { action, .. } => *action,
            _ => None,
        }
    }

    pub fn is_checked(&self, path: &MenuPath) -> Option<bool> {
        match self.item(path)? {
            MenuItem::Check { checked, .. } => Some(*checked),
            _ => None,
        }
    }

    pub fn draw_bar(&self, fb: &mut FrameBuffer) {
        self.draw_bar_with(fb, None);
    }

    fn draw_bar_with(&self, fb: &mut FrameBuffer, active: Option<usize>) {
        let cols = fb.size().cols as i32;
        fb.hline(1, 1, cols, ' ', theme::MENUBAR);
        for (i, m) in self.menus.iter().enumerate() {
            let style = if active == Some(i) { theme::MENUBAR_ACTIVE } else { theme::MENUBAR };
            fb.put_str(self.title_x(i), 1, &format!(" {} ", m.title), style);
        }
    }

    /// Size of a drop-down listing `items`.
    pub fn dropdown_size(items: &[MenuItem]) -> (i32, i32) {
        let has_check = items.iter().any(|i| matches!(i, MenuItem::Check { .. }));
        let has_sub = items.iter().any(|i| matches!(i, MenuItem::Submenu { .. }));
        let prefix = if has_check { 4 } else { 0 };
        let label = items.iter().map(|i| i.label().chars().count()).max().unwrap_or(0);
        let hint = items.iter().map(|i| i.hint_text().chars().count()).max().unwrap_or(0);
        let hint = if hint > 0 { hint + 2 } else { 0 };
        let arrow = if has_sub { 2 } else { 0 };
        let w = prefix + label + hint + arrow + 2 + 2;
        (w as i32, items.len() as i32 + 2)
    }

    fn item_text(items: &[MenuItem], item: &MenuItem, inner_w: usize) -> String {
        let has_check = items.iter().any(|i| matches!(i, MenuItem::Check { .. }));
        let prefix = match item {
            MenuItem::Check { checked: true, .. } => "[x] ",
            MenuItem::Check { checked: false, .. } => "[ ] ",
            _ if has_check => "    ",
            _ => "",
        };
        let right = match item {
            MenuItem::Submenu { .. } => ">".to_string(),
            _ => item.hint_text().to_string(),
        };
        let left = format!(" {prefix}{}", item.label());
        let room = inner_w.saturating_sub(right.chars().count() + 1);
        format!("{}{right} ", fixed_width(&left, room))
    }

    /// Rect of drop-down `level` given the rect of its parent drop-down.
    fn dropdown_rect(&self, nav: &MenuNav, level: usize, parent: Option<Rect>, screen: Rect) -> Rect {
        let (w, h) = MenuBar::dropdown_size(nav.items_at(&self.menus, level));
        let (mut x, mut y) = match parent {
            None => (self.title_x(nav.top), 2),
            Some(p) => (p.right() + 1, p.y + nav.stack[level - 1] as i32),
        };
        if x + w - 1 > screen.right() {
            x = match parent {
                Some(p) => p.x - w,
                None => screen.right() - w + 1,
            };
        }
        if y + h - 1 > screen.bottom() {
            y = screen.bottom() - h + 1;
        }
        Rect::new(x.max(1), y.max(2), w, h)
    }

    fn draw_dropdown(&self, fb: &mut FrameBuffer, nav: &MenuNav, level: usize, rect: Rect) {
        let items = nav.items_at(&self.menus, level);
        let _ = fb.draw_border(rect, BorderStyle::Single, theme::POPUP.fg, theme::POPUP.bg);
        let inner = rect.inset(1);
        let sep = fb.glyphs().border(BorderStyle::Single).horizontal;
        for (i, item) in items.iter().enumerate() {
            let y = inner.y + i as i32;
            if item.is_separator() {
                fb.hline(inner.x, y, inner.w, sep, theme::POPUP);
                continue;
            }
            let style = if nav.stack.get(level) == Some(&i) { theme::POPUP_SELECTED } else { theme::POPUP };
            fb.put_str(inner.x, y, &MenuBar::item_text(items, item, inner.w as usize), style);
        }
    }

    /// Index of the item at screen row `y` in a drop-down at `rect`.
    fn item_at(rect: Rect, y: i32, items: &[MenuItem]) -> Option<usize> {
        let inner = rect.inset(1);
        if y < inner.y || y > inner.bottom() {
            return None;
        }
        let i = (y - inner.y) as usize;
        (i < items.len() && !items[i].is_separator()).then_some(i)
    }

    fn close_levels(&self, cx: &mut ModalCx<'_>, open: &mut Vec<OpenLevel>, keep: usize) {
        while open.len() > keep {
            let lvl = open.pop().expect("non-empty");
            lvl.snap.restore(cx.fb);
            cx.redraw(lvl.rect, None);
        }
    }

    /// Brings the drawn drop-downs in line with `nav`.
    fn sync(&self, cx: &mut ModalCx<'_>, nav: &MenuNav, open: &mut Vec<OpenLevel>, drawn_top: &mut usize) {
        if *drawn_top != nav.top {
            self.close_levels(cx, open, 0);
            *drawn_top = nav.top;
        }
        let want = nav.stack.len();
        if open.len() > want {
            self.close_levels(cx, open, want);
        }
        let screen = cx.fb.bounds();
        while open.len() < want {
            let level = open.len();
            let rect = self.dropdown_rect(nav, level, open.last().map(|l| l.rect), screen);
            open.push(OpenLevel { rect, snap: popup_open(cx.fb, rect) });
            self.draw_dropdown(cx.fb, nav, level, rect);
        }
        for (level, lvl) in open.iter().enumerate() {
            self.draw_dropdown(cx.fb, nav, level, lvl.rect);
        }
        self.draw_bar_with(cx.fb, Some(nav.top));
    }

    /// The modal menu loop. `click_x` is the column of the click that
    /// opened it, `None` when opened from the keyboard.
    pub fn run(&mut self, cx: &mut ModalCx<'_>, click_x: Option<i32>) -> MenuResult {
        let top = match click_x {
            Some(x) => match self.title_at(x) {
                Some(t) => t,
                None => return MenuResult::default(),
            },
            None => 0,
        };
        let mut nav = MenuNav::open(&self.menus, top);
        let mut open: Vec<OpenLevel> = Vec::new();
        let mut drawn_top = top;
        let mut result = MenuResult::default();
        self.sync(cx, &nav, &mut open, &mut drawn_top);
        loop {
            let ev = match cx.next_input() {
                ModalInput::Event(ev, _) => ev,
                ModalInput::Exhausted => break,
            };
            let step = match ev {
                InputEvent::Key(k) => nav.key(&mut self.menus, k),
                InputEvent::Mouse(m) if m.kind == MouseKind::Press => {
                    if m.y == 1 {
                        match self.title_at(m.x) {
                            Some(t) if t == nav.top => MenuStep::Exit,
                            Some(t) => {
                                nav.open_top(&self.menus, t);
                                MenuStep::Moved
                            }
                            None => MenuStep::Exit,
                        }
                    } else if let Some(level) = open.iter().rposition(|l| l.rect.contains(m.x, m.y)) {
                        match MenuBar::item_at(open[level].rect, m.y, nav.items_at(&self.menus, level)) {
                            Some(i) => {
                                nav.pick(level, i);
                                nav.activate(&mut self.menus)
                            }
                            None => MenuStep::Nothing,
                        }
                    } else {
                        result.reinject = Some(ev);
                        MenuStep::Exit
                    }
                }
                _ => MenuStep::Nothing,
            };
            match step {
                MenuStep::Exit => break,
                MenuStep::Activate(path) => {
                    result.activated = Some(path);
                    break;
                }
                MenuStep::Moved | MenuStep::Toggled(_) => self.sync(cx, &nav, &mut open, &mut drawn_top),
                MenuStep::Nothing => {}
            }
        }
        self.close_levels(cx, &mut open, 0);
        self.draw_bar_with(cx.fb, None);
        self.last_nav = Some(nav);
        result
    }
}
