//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line for
//! each, and exits non-zero if any failed.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cellui::backend::{Color, GridSnapshot, InputEvent, KeyCode, MouseEvent, ScriptItem, Session};
use cellui::demo::{
    build_controls_demo, build_demo, build_form_demo, build_grid_demo, build_main_menu, build_menu_demo,
    build_menu_tabs_demo, build_tabs_demo, build_tree_demo, build_windows_demo, menu_lines, BuildFn, WindowsIds,
    DEMOS, PROMPT,
};
use cellui::events::{HandlerRegistry, Screen, WidgetId};
use cellui::geometry::Rect;
use cellui::grid::{Grid, GridClick, GridMode};
use cellui::nav::{MenuBar, MenuPath, TabControl};
use cellui::render::{fixed_width, BorderStyle, Cell, FrameBuffer, GlyphSet};
use cellui::tree::TreeView;
use cellui::widgets::{
    theme, Button, CheckBox, ComboBox, EditBox, Label, ListBox, Orientation, Panel,
    ProgressBar, ScrollBar, ScrollBarState, Spinner, SpinnerState, TextBox,
};
use cellui::winmgr::{add_window, Desktop, Window, WindowState};

use common::{click_items, mismatches, Rig, SIZE};

type Outcome = Result<String, String>;

fn main() {
    let criteria: [(&str, fn() -> Outcome); 15] = [
        ("flush idempotence", flush_idempotence),
        ("diff exactness", diff_exactness),
        ("grid repaint budget", grid_repaint_budget),
        ("grid click exactness", grid_click_exactness),
        ("menu restore", menu_restore),
        ("one-level submenu back-out", submenu_back_out),
        ("window occlusion oracle", window_occlusion),
        ("move damage bound", move_damage_bound),
        ("child containment", child_containment),
        ("focus rules", focus_rules),
        ("scrollbar clamp", scrollbar_clamp),
        ("tree repaint budget", tree_repaint_budget),
        ("leak endurance", leak_endurance),
        ("snapshot goldens", snapshot_goldens),
        ("textbox cursor immediacy", textbox_cursor),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into());
            Err(msg)
        });
        let ms = started.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name} ({ms} ms): {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({ms} ms): {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}

fn all_screens() -> Vec<(&'static str, BuildFn)> {
    let mut v: Vec<(&'static str, BuildFn)> = vec![("main menu", build_main_menu)];
    v.extend(DEMOS.iter().map(|d| (d.title, d.build)));
    v
}

fn within(limit: Duration, started: Instant) -> Result<(), String> {
    let t = started.elapsed();
    if t < limit {
        Ok(())
    } else {
        Err(format!("took {t:?}, limit {limit:?}"))
    }
}

fn rect_of(scr: &Screen, id: WidgetId) -> Rect {
    scr.widget_dyn(id).expect("live widget").base().rect
}

// ---- 1 ----------------------------------------------------------------

fn flush_idempotence() -> Outcome {
    let started = Instant::now();
    let mut screens = 0;
    for (name, build) in all_screens() {
        let reg = HandlerRegistry::new_shared();
        let mut scr = build(&reg, SIZE).map_err(|e| e.to_string())?;
        let mut session = Session::headless(SIZE);
        let mut fb = FrameBuffer::new(SIZE);
        scr.ensure_focus();
        scr.draw_all(&mut fb);
        fb.set_cursor(scr.cursor());
        let first = fb.flush(&mut session).map_err(|e| e.to_string())?;
        let second = fb.flush(&mut session).map_err(|e| e.to_string())?;
        if first.cells_written == 0 {
            return Err(format!("{name}: first flush wrote nothing"));
        }
        if second.cells_written != 0 {
            return Err(format!("{name}: second flush wrote {} cells", second.cells_written));
        }
        // repainting unchanged content is free as well
        scr.draw_all(&mut fb);
        let third = fb.flush(&mut session).map_err(|e| e.to_string())?;
        if third.cells_written != 0 {
            return Err(format!("{name}: repaint of unchanged screen wrote {} cells", third.cells_written));
        }
        screens += 1;
    }
    within(Duration::from_secs(1), started)?;
    Ok(format!("{screens} screens, second flush wrote 0 cells on each"))
}

// ---- 2 ----------------------------------------------------------------

fn random_color(rng: &mut ChaCha8Rng) -> Color {
    Color::ALL[rng.gen_range(0..16)]
}

fn random_rect(rng: &mut ChaCha8Rng) -> Rect {
    Rect::new(rng.gen_range(-5..85), rng.gen_range(-3..27), rng.gen_range(0..40), rng.gen_range(0..15))
}

fn random_text(rng: &mut ChaCha8Rng) -> String {
    let n = rng.gen_range(0..30);
    (0..n).map(|_| rng.gen_range(b' '..=b'~') as char).collect()
}

fn diff_exactness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut fb = FrameBuffer::new(SIZE);
    let mut session = Session::headless(SIZE);
    let mut total = 0;
    for batch in 0..1000 {
        for _ in 0..rng.gen_range(1..12) {
            let (fg, bg) = (random_color(&mut rng), random_color(&mut rng));
            match rng.gen_range(0..7) {
                0 => fb.put_cell(rng.gen_range(-2..84), rng.gen_range(-2..28), Cell::with_colors('x', fg, bg)),
                1 => {
                    let _ = fb.put_text(rng.gen_range(-10..85), rng.gen_range(0..26), &random_text(&mut rng), fg, bg);
                }
                2 => fb.fill_rect(random_rect(&mut rng), rng.gen_range(b'a'..=b'z') as char, fg, bg),
                3 => {
                    let style = if rng.gen() { BorderStyle::Single } else { BorderStyle::Double };
                    let _ = fb.draw_border(random_rect(&mut rng), style, fg, bg);
                }
                4 => fb.push_clip(random_rect(&mut rng)),
                5 => {
                    let _ = fb.pop_clip();
                }
                _ => fb.set_glyphs(if rng.gen() { GlyphSet::Ascii } else { GlyphSet::Unicode }),
            }
        }
        while fb.clip_depth() > 0 {
            let _ = fb.pop_clip();
        }
        let shown = session.snapshot().map_err(|e| e.to_string())?;
        let want: Vec<Cell> = fb.back_cells().to_vec();
        let naive = shown.cells().iter().zip(&want).filter(|(a, b)| a != b).count();
        let stats = fb.flush(&mut session).map_err(|e| e.to_string())?;
        if stats.cells_written != naive {
            return Err(format!("batch {batch}: wrote {} cells, naive diff {naive}", stats.cells_written));
        }
        let after = session.snapshot().map_err(|e| e.to_string())?;
        if after.cells() != want.as_slice() {
            return Err(format!("batch {batch}: terminal differs from the frame buffer after flush"));
        }
        total += naive;
    }
    Ok(format!("1000 batches, {total} cells, every count equal to the naive diff"))
}

// ---- 3 ----------------------------------------------------------------

fn grid_id(rig: &Rig) -> WidgetId {
    rig.widgets_of("Grid")[0]
}

fn grid_repaint_budget() -> Outcome {
    let mut rig = Rig::new(build_grid_demo);
    let id = grid_id(&rig);
    if rig.scr.focus() != Some(id) {
        return Err("grid is not focused".into());
    }
    let rect = rect_of(&rig.scr, id);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let keys = [KeyCode::Up, KeyCode::Down, KeyCode::Left, KeyCode::Right];
    let (mut worst, mut checked) = (0, 0);
    for step in 0..50 {
        let (sel, top, rn, widths) = {
            let g = rig.scr.widget::<Grid>(id).unwrap().state();
            let widths: Vec<usize> = g.columns().iter().map(|c| c.width).collect();
            (g.selection(), g.scroll_top(), g.row_number_width() as usize, widths)
        };
        let key = keys[rng.gen_range(0..4)];
        let cells = rig.key(key);
        let g = rig.scr.widget::<Grid>(id).unwrap().state();
        if g.mode() != GridMode::Navigate || rig.snap().cursor().is_some() {
            return Err(format!("step {step}: {key:?} entered edit mode"));
        }
        if g.scroll_top() != top {
            continue;
        }
        let budget = widths[sel.1] + widths[g.selection().1] + 2 * rn;
        if cells > budget {
            return Err(format!("step {step}: {key:?} flushed {cells} cells, budget {budget} ({rect:?})"));
        }
        worst = worst.max(cells);
        checked += 1;
    }
    Ok(format!("{checked} non-scrolling steps, worst {worst} cells, never in edit mode"))
}

// ---- 4 ----------------------------------------------------------------

/// Where each cell's glyphs sit, from the layout rules alone: a border,
/// a header row and a dash row, then right-aligned row numbers as wide as
/// the row count, one space, and the columns separated by one space.
fn grid_layout_oracle(rect: Rect, widths: &[usize], rows: usize) -> Vec<(Rect, (usize, usize))> {
    let rn = rows.to_string().len() as i32;
    let mut out = Vec::new();
    for row in 0..rows {
        let y = rect.y + 3 + row as i32;
        if y > rect.bottom() - 1 {
            break;
        }
        let mut x = rect.x + 1 + rn + 1;
        for (col, &w) in widths.iter().enumerate() {
            out.push((Rect::new(x, y, w as i32, 1), (row, col)));
            x += w as i32 + 1;
        }
    }
    out
}

fn grid_click_exactness() -> Outcome {
    let probe = Rig::new(build_grid_demo);
    let id = grid_id(&probe);
    let rect = rect_of(&probe.scr, id);
    let state = probe.scr.widget::<Grid>(id).unwrap().state().clone();
    let widths: Vec<usize> = state.columns().iter().map(|c| c.width).collect();
    let layout = grid_layout_oracle(rect, &widths, state.rows().len());
    let shown = probe.snap();
    for (r, (row, col)) in &layout {
        let want = fixed_width(state.cell_text(*row, *col).unwrap(), r.w as usize);
        let got: String = (r.x..=r.right()).map(|x| shown.cell(x, r.y).glyph).collect();
        if got != want {
            return Err(format!("cell {row},{col} shows {got:?} at {r:?}, expected {want:?}"));
        }
    }
    let oracle = |x: i32, y: i32| layout.iter().find(|(r, _)| r.contains(x, y)).map(|(_, c)| *c);

    let inner = rect.inset(1);
    let mut positions = 0;
    for start in [(0usize, 0usize), (9, 4)] {
        for (x, y) in inner.cells() {
            let mut rig = Rig::new(build_grid_demo);
            for _ in 0..start.0 {
                rig.key(KeyCode::Down);
            }
            for _ in 0..start.1 {
                rig.key(KeyCode::Right);
            }
            rig.click(x, y);
            let got = rig.scr.widget::<Grid>(id).unwrap().state().selection();
            let want = oracle(x, y).unwrap_or(start);
            if got != want {
                return Err(format!("click at ({x},{y}) from {start:?} selected {got:?}, expected {want:?}"));
            }
            positions += 1;
        }
    }

    // state level: the second click on a cell starts editing
    for (r, cell) in &layout {
        let mut s = state.clone();
        let (first, _) = s.click(rect, r.x, r.y, cellui::events::ClickVerdict::AcceptSingle);
        let expect_first = if *cell == state.selection() { GridClick::EditStarted } else { GridClick::Selected };
        let (second, _) = if first == GridClick::EditStarted {
            (GridClick::EditStarted, Vec::new())
        } else {
            s.click(rect, r.right(), r.y, cellui::events::ClickVerdict::AcceptSingle)
        };
        if first != expect_first || second != GridClick::EditStarted {
            return Err(format!("cell {cell:?}: clicks gave {first:?}, {second:?}"));
        }
    }

    // and through the event loop: the edit cursor shows while the second click is held
    let mut rig = Rig::new(build_grid_demo);
    for (r, cell) in &layout {
        let mut items = click_items(r.x, r.y);
        items.push(ScriptItem::Wait(common::CLICK_GAP_MS));
        items.push(ScriptItem::Event(InputEvent::Mouse(MouseEvent::press(r.x, r.y))));
        items.push(ScriptItem::Snap("edit".into()));
        items.push(ScriptItem::Event(InputEvent::Key(KeyCode::Esc)));
        rig.feed(items);
        let snaps = rig.take_snaps();
        let cursor = snaps[0].1.cursor();
        if !cursor.is_some_and(|(cx, cy)| r.contains(cx, cy) || (cx == r.right() + 1 && cy == r.y)) {
            return Err(format!("cell {cell:?}: second click showed cursor {cursor:?}"));
        }
    }
    Ok(format!("{positions} positions exact, second click edits all {} cells", layout.len()))
}

// ---- 5 ----------------------------------------------------------------

fn menu_restore() -> Outcome {
    let mut rig = Rig::new(build_menu_demo);
    let before = rig.snap();
    let script = "\
        KEY F10\nSNAP file\nKEY ESC\n\
        KEY F10\nKEY RIGHT\nSNAP edit\nKEY ESC\n\
        KEY F10\nKEY RIGHT\nKEY RIGHT\nKEY DOWN\nKEY DOWN\nKEY RIGHT\nSNAP zoom\nKEY ESC\nKEY ESC\n\
        KEY F10\nKEY LEFT\nKEY LEFT\nKEY RIGHT\nSNAP font\n\
        KEY DOWN\nKEY DOWN\nKEY DOWN\nKEY DOWN\nKEY DOWN\nKEY DOWN\n\
        KEY RIGHT\nSNAP font_size\nKEY ESC\nKEY ESC\n\
        KEY DOWN\nKEY RIGHT\nSNAP size\nKEY ESC\nKEY ESC\n\
        KEY F10\nKEY LEFT\nSNAP help\nKEY ESC\n";
    rig.script(script);
    let snaps = rig.take_snaps();
    let expect: [(&str, &[&str]); 7] = [
        ("file", &["New", "Open...", "Save", "Exit"]),
        ("edit", &["Undo", "Cut", "Copy", "Paste"]),
        ("zoom", &["Status Bar", "Line Numbers", "Zoom In", "Zoom Out", "Reset Zoom"]),
        ("font", &["Arial", "Times New Roman", "Courier New", "Bold", "Italic", "Underline"]),
        ("font_size", &["Courier New", "10pt", "18pt"]),
        ("size", &["Font", "12pt", "16pt"]),
        ("help", &["Contents", "About"]),
    ];
    if snaps.len() != expect.len() {
        return Err(format!("{} snapshots taken, expected {}", snaps.len(), expect.len()));
    }
    for ((name, snap), (want_name, labels)) in snaps.iter().zip(expect) {
        if name != want_name {
            return Err(format!("snapshot {name} out of order"));
        }
        for l in labels {
            if !snap.contains(l) {
                return Err(format!("{name}: {l:?} not shown"));
            }
        }
    }
    // a mouse-opened menu closed by a click elsewhere
    rig.feed(vec![
        ScriptItem::Event(InputEvent::Mouse(MouseEvent::press(3, 1))),
        ScriptItem::Event(InputEvent::Mouse(MouseEvent::press(70, 16))),
        ScriptItem::Event(InputEvent::Mouse(MouseEvent::release(70, 16))),
    ]);
    let after = rig.snap();
    if after != before {
        return Err(format!("{} cells differ after closing every menu", after.diff_count(&before)));
    }
    Ok("all 5 menus and 3 submenus opened and closed, grid bit-identical".into())
}

// ---- 6 ----------------------------------------------------------------

fn submenu_back_out() -> Outcome {
    let mut rig = Rig::new(build_menu_demo);
    // File -> Edit -> View -> Format (RIGHT), open Font (RIGHT), UP wraps to Size,
    // RIGHT opens Size, one LEFT backs out
    rig.script("KEY F10\nKEY RIGHT\nKEY RIGHT\nKEY RIGHT\nKEY RIGHT\nKEY UP\nKEY RIGHT\nSNAP size_open\nKEY LEFT\nSNAP backed_out\n");
    let snaps = rig.take_snaps();
    let (open, back) = (&snaps[0].1, &snaps[1].1);
    let mb: &MenuBar = rig.scr.menubar().unwrap();
    let path = mb.last_path().ok_or("menu loop left no path")?;
    let format = mb.menus.iter().position(|m| m.title == "Format").unwrap();
    let font_items = mb.menus[format].items[0].children();
    let size_idx = font_items.iter().position(|i| i.label() == "Size").unwrap();
    if path != MenuPath(vec![format, 0, size_idx]) {
        return Err(format!("after LEFT the path is {path:?}"));
    }
    if !open.contains("10pt") {
        return Err("Size submenu never opened".into());
    }
    if back.contains("10pt") {
        return Err("Size submenu still open after LEFT".into());
    }
    if !back.contains("Times New Roman") {
        return Err("Font menu closed by LEFT".into());
    }
    // the Font drop-down sits right of the Format one, so its Size is the rightmost
    let (sx, sy) = (1..=SIZE.rows as i32)
        .flat_map(|y| back.row_text(y).match_indices(" Size").map(move |(i, _)| (i as i32 + 1, y)).collect::<Vec<_>>())
        .max()
        .ok_or("Size item not visible")?;
    let c = back.cell(sx + 1, sy);
    if (c.fg, c.bg) != (theme::POPUP_SELECTED.fg, theme::POPUP_SELECTED.bg) {
        return Err(format!("Size item is not highlighted: {c:?}"));
    }
    Ok("LEFT closed Size only, Font open with Size highlighted".into())
}

// ---- 7 ----------------------------------------------------------------

fn window_rect(rig: &Rig, w: WidgetId) -> Rect {
    rect_of(&rig.scr, w)
}

fn window_state(rig: &Rig, w: WidgetId) -> WindowState {
    rig.scr.widget::<Window>(w).unwrap().state()
}

/// `(x, y)` hits window `w` itself, not something in front of it.
fn hits_window(rig: &Rig, w: WidgetId, x: i32, y: i32) -> bool {
    rig.scr.hit_test(x, y).is_some_and(|h| h == w || rig.scr.enclosing(h, "Window") == Some(w))
}

fn taskbar_entry_x(rig: &Rig, w: WidgetId) -> Option<i32> {
    let d = rig.scr.desktop()?;
    let tb = rect_of(&rig.scr, d.taskbar());
    let mut x = tb.x + 1;
    for &id in d.windows() {
        let title = rig.scr.widget::<Window>(id)?.title().chars().count() as i32;
        if id == w {
            return Some(x + 1);
        }
        x += title + 3;
    }
    None
}

/// One random window-manager action driven through the mouse or keyboard.
fn random_wm_step(rig: &mut Rig, rng: &mut ChaCha8Rng) -> &'static str {
    let wins: Vec<WidgetId> = rig.scr.desktop().unwrap().windows().to_vec();
    let w = wins[rng.gen_range(0..wins.len())];
    let r = window_rect(rig, w);
    let state = window_state(rig, w);
    let (tx, ty) = (r.x + 2, r.y + 1);
    let buttons = r.x + r.w - 10;
    match rng.gen_range(0..7) {
        _ if state == WindowState::Minimized => {
            let x = taskbar_entry_x(rig, w).unwrap();
            rig.click(x, SIZE.rows as i32);
            "restore from taskbar"
        }
        0 | 1 if hits_window(rig, w, tx, ty) => {
            rig.drag(tx, ty, rng.gen_range(1..=80), rng.gen_range(1..=24));
            "move"
        }
        2 if hits_window(rig, w, r.right(), r.bottom()) => {
            rig.drag(r.right(), r.bottom(), rng.gen_range(1..=80), rng.gen_range(1..=24));
            "resize"
        }
        3 if r.w >= 11 && hits_window(rig, w, buttons + 1, ty) => {
            rig.click(buttons + 1, ty);
            "minimize"
        }
        4 if r.w >= 11 && hits_window(rig, w, buttons + 4, ty) => {
            rig.click(buttons + 4, ty);
            "maximize or restore"
        }
        5 if hits_window(rig, w, tx, ty) => {
            rig.click(tx, ty);
            "raise"
        }
        _ => {
            rig.key(KeyCode::F(12));
            "F12"
        }
    }
}

fn window_occlusion() -> Outcome {
    let started = Instant::now();
    let mut rig = Rig::new(build_windows_demo);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut kinds = BTreeSet::new();
    for step in 0..200 {
        let what = random_wm_step(&mut rig, &mut rng);
        kinds.insert(what);
        let scratch = rig.from_scratch();
        let bad = mismatches(&rig.snap(), &scratch);
        if !bad.is_empty() {
            return Err(format!("step {step} ({what}): {} cells differ, first at {:?}", bad.len(), bad[0]));
        }
        if rig.scr.desktop().unwrap().windows().len() != 4 {
            return Err(format!("step {step} ({what}) closed a window"));
        }
    }
    within(Duration::from_secs(10), started)?;
    Ok(format!("200 steps equal to a full redraw; actions: {}", kinds.into_iter().collect::<Vec<_>>().join(", ")))
}

// ---- 8 ----------------------------------------------------------------

fn move_damage_bound() -> Outcome {
    let mut rig = Rig::new(build_windows_demo);
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let taskbar_w = SIZE.cols as usize;
    let (mut moves, mut worst_ratio) = (0, 0.0f64);
    for _ in 0..300 {
        let wins: Vec<WidgetId> = rig.scr.desktop().unwrap().windows().to_vec();
        let w = wins[rng.gen_range(0..wins.len())];
        let r = window_rect(&rig, w);
        let (tx, ty) = (r.x + 2, r.y + 1);
        if !hits_window(&rig, w, tx, ty) {
            rig.key(KeyCode::F(12));
            continue;
        }
        rig.click(tx, ty); // activation is not part of the drag
        let (nx, ny) = (tx + rng.gen_range(-10..=10), ty + rng.gen_range(-6..=6));
        let cells = rig.drag(tx, ty, nx, ny);
        let new = window_rect(&rig, w);
        let bound = r.union_bounds(&new).area() + taskbar_w;
        if cells > bound {
            return Err(format!("drag {r:?} -> {new:?} flushed {cells} cells, bound {bound}"));
        }
        if new != r {
            moves += 1;
            worst_ratio = worst_ratio.max(cells as f64 / bound as f64);
        }
    }
    if moves < 50 {
        return Err(format!("only {moves} drags moved a window"));
    }
    Ok(format!("{moves} drags, worst {:.0}% of the bound", worst_ratio * 100.0))
}

// ---- 9 ----------------------------------------------------------------

fn random_local(rng: &mut ChaCha8Rng, interior: Rect) -> (i32, i32) {
    (rng.gen_range(-2..interior.w + 3), rng.gen_range(-2..interior.h + 3))
}

/// A window holding one child of every kind, placed so many overflow.
fn containment_screen(reg: &cellui::events::Registry, rect: Rect, seed: u64, children: bool) -> Screen {
    let mut scr = Screen::new(reg, SIZE);
    Desktop::install(&mut scr).unwrap();
    let win = add_window(&mut scr, Window::new(rect, "Probe")).unwrap();
    if !children {
        return scr;
    }
    let interior = scr.widget::<Window>(win).unwrap().interior();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let items = ["alpha", "beta", "gamma", "delta", "epsilon"];
    macro_rules! child {
        ($w:expr) => {{
            scr.register_child(win, $w, &[]).unwrap()
        }};
    }
    let (x, y) = random_local(&mut rng, interior);
    child!(Label::new(x, y, "a label that is fairly long"));
    let (x, y) = random_local(&mut rng, interior);
    child!(Button::new(x, y, "Button"));
    let (x, y) = random_local(&mut rng, interior);
    child!(CheckBox::new(x, y, "Check me"));
    let (x, y) = random_local(&mut rng, interior);
    child!(TextBox::new(x, y, rng.gen_range(3..40)).with_text("some text here"));
    let (x, y) = random_local(&mut rng, interior);
    child!(ComboBox::new(x, y, rng.gen_range(4..30), &items));
    let (x, y) = random_local(&mut rng, interior);
    child!(ListBox::new(Rect::new(x, y, rng.gen_range(3..30), rng.gen_range(3..10)), &items));
    let (x, y) = random_local(&mut rng, interior);
    let mut eb = EditBox::new(Rect::new(x, y, rng.gen_range(3..40), rng.gen_range(3..8)));
    eb.set_text("line one\nline two is longer than most\nthree");
    child!(eb);
    let (x, y) = random_local(&mut rng, interior);
    let mut pb = ProgressBar::new(x, y, rng.gen_range(3..50));
    pb.set_value(rng.gen_range(0..=100));
    child!(pb);
    let (x, y) = random_local(&mut rng, interior);
    child!(Spinner::new(x, y, rng.gen_range(5..20), SpinnerState::new(5, 0, 99, 1)));
    let (x, y) = random_local(&mut rng, interior);
    child!(ScrollBar::new(x, y, rng.gen_range(3..40), ScrollBarState::new(Orientation::Horizontal, 3, 0, 10)));
    let (x, y) = random_local(&mut rng, interior);
    child!(ScrollBar::new(x, y, rng.gen_range(3..20), ScrollBarState::new(Orientation::Vertical, 3, 0, 10)));
    let (x, y) = random_local(&mut rng, interior);
    child!(Grid::new(Rect::new(x, y, rng.gen_range(4..60), rng.gen_range(4..14)), cellui::demo::data::people_grid()));
    let (x, y) = random_local(&mut rng, interior);
    child!(TreeView::new(Rect::new(x, y, rng.gen_range(4..40), rng.gen_range(3..14)), cellui::demo::data::org_tree()));
    let (x, y) = random_local(&mut rng, interior);
    let panel = child!(Panel::new(Rect::new(x, y, rng.gen_range(3..40), rng.gen_range(3..10))).titled("Panel"));
    scr.register_child(panel, Label::new(1, 1, "nested label inside a panel"), &[]).unwrap();
    let (x, y) = random_local(&mut rng, interior);
    let tabs = child!(TabControl::new(Rect::new(x, y, rng.gen_range(6..50), rng.gen_range(4..12)), &["One", "Two"]));
    scr.register_in_page(tabs, 0, TextBox::new(1, 1, 30).with_text("inside a tab page"), &[]).unwrap();
    scr.register_in_page(tabs, 1, CheckBox::new(1, 1, "second page"), &[]).unwrap();
    scr
}

fn child_containment() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let reg = HandlerRegistry::new_shared();
    let mut checked = 0usize;
    for i in 0..500 {
        let rect = Rect::new(rng.gen_range(1..60), rng.gen_range(1..18), rng.gen_range(6..60), rng.gen_range(4..20));
        let seed = rng.gen();
        let mut bare = containment_screen(&reg, rect, seed, false);
        let mut fb = FrameBuffer::new(SIZE);
        bare.draw_all(&mut fb);
        let reference = fb.back_cells().to_vec();
        drop(bare);

        let scr = containment_screen(&reg, rect, seed, true);
        let win = scr.desktop().unwrap().windows()[0];
        let interior = scr.widget::<Window>(win).unwrap().interior();
        let mut rig = Rig::from_screen(reg.clone(), scr);
        // focus every child in turn, and flip the tab page
        for _ in 0..16 {
            rig.key(KeyCode::Tab);
        }
        rig.key(KeyCode::F(11));
        let outside: Vec<(i32, i32)> =
            mismatches(&rig.snap(), &reference).into_iter().filter(|&(x, y)| !interior.contains(x, y)).collect();
        if !outside.is_empty() {
            return Err(format!("geometry {i} {rect:?}: {} cells outside the interior changed, e.g. {:?}", outside.len(), outside[0]));
        }
        checked += SIZE.cell_count() - interior.intersect(&SIZE.rect()).area();
    }
    Ok(format!("500 geometries x 16 child kinds, {checked} outside cells untouched"))
}

// ---- 10 ---------------------------------------------------------------

fn focus_rules() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let keys = [
        KeyCode::Tab,
        KeyCode::Tab,
        KeyCode::Tab,
        KeyCode::BackTab,
        KeyCode::F(11),
        KeyCode::F(12),
        KeyCode::Up,
        KeyCode::Down,
        KeyCode::Left,
        KeyCode::Right,
        KeyCode::Space,
    ];
    let screens = all_screens();
    let per = 10_000 / screens.len() + 1;
    let mut events = 0;
    let mut tabs_seen = 0;
    for (name, build) in &screens {
        let mut rig = Rig::new(*build);
        for _ in 0..per {
            let is_tab;
            if rng.gen_range(0..4) == 0 {
                is_tab = false;
                rig.click(rng.gen_range(1..=80), rng.gen_range(2..=23));
            } else {
                let k = keys[rng.gen_range(0..keys.len())];
                is_tab = matches!(k, KeyCode::Tab | KeyCode::BackTab);
                rig.key(k);
            }
            events += 1;
            if let Some(f) = rig.scr.focus() {
                if rig.kind_of(f) == "Label" {
                    return Err(format!("{name}: a Label got focus (after tab: {is_tab})"));
                }
                tabs_seen += is_tab as usize;
            }
        }
    }

    // F12 cycles windows in creation order; TAB stays inside the active one
    let mut rig = Rig::new(build_windows_demo);
    let ids = *rig.scr.state::<WindowsIds>().unwrap();
    let order = [ids.information, ids.user_form, ids.select_country, ids.status];
    if rig.scr.desktop().unwrap().active() != Some(ids.status) {
        return Err("the last window added is not active".into());
    }
    for i in 0..8 {
        rig.key(KeyCode::F(12));
        let want = order[i % 4];
        if rig.scr.desktop().unwrap().active() != Some(want) {
            return Err(format!("F12 #{} activated {:?}, expected {want:?}", i + 1, rig.scr.desktop().unwrap().active()));
        }
        if let Some(f) = rig.scr.focus() {
            if f != want && !rig.scr.is_descendant(f, want) {
                return Err("focus left the active window after F12".into());
            }
        }
    }
    while rig.scr.desktop().unwrap().active() != Some(ids.user_form) {
        rig.key(KeyCode::F(12));
    }
    let mut seen = Vec::new();
    for _ in 0..8 {
        rig.key(KeyCode::Tab);
        let f = rig.scr.focus().ok_or("TAB left nothing focused")?;
        if !rig.scr.is_descendant(f, ids.user_form) {
            return Err("TAB moved focus out of the active window".into());
        }
        if rig.scr.desktop().unwrap().active() != Some(ids.user_form) {
            return Err("TAB changed the active window".into());
        }
        seen.push(f);
    }
    if seen[..4] != seen[4..] || seen[..4].iter().collect::<BTreeSet<_>>().len() != 4 {
        return Err(format!("TAB did not cycle the 4 User Form controls: {seen:?}"));
    }

    // F11 cycles pages
    for (build, pages) in [(build_tabs_demo as BuildFn, 4), (build_menu_tabs_demo, 3)] {
        let mut rig = Rig::new(build);
        let tabs = rig.widgets_of("TabControl")[0];
        for i in 1..=2 * pages {
            rig.key(KeyCode::F(11));
            let active = rig.scr.widget::<TabControl>(tabs).unwrap().active();
            if active != i % pages {
                return Err(format!("F11 #{i} showed page {active}, expected {}", i % pages));
            }
        }
    }
    Ok(format!("{events} fuzz events ({tabs_seen} tab presses) never focused a Label; F12, TAB and F11 cycle"))
}

// ---- 11 ---------------------------------------------------------------

fn scrollbar_clamp() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut rig = Rig::new(build_controls_demo);
    let bars = rig.widgets_of("ScrollBar");
    if bars.len() != 2 {
        return Err(format!("{} scroll bars in the controls demo", bars.len()));
    }
    let keys = [
        KeyCode::Left,
        KeyCode::Right,
        KeyCode::Up,
        KeyCode::Down,
        KeyCode::KeyPgUp,
        KeyCode::KeyPgDown,
        KeyCode::Home,
        KeyCode::End,
    ];
    let mut distinct = BTreeSet::new();
    for &bar in &bars {
        let r = rect_of(&rig.scr, bar);
        for i in 0..10_000 {
            if rng.gen() {
                rig.scr.set_focus(bar);
                rig.key(keys[rng.gen_range(0..keys.len())]);
            } else {
                let x = rng.gen_range(r.x - 1..=r.right() + 1);
                let y = rng.gen_range(r.y - 1..=r.bottom() + 1);
                let wait = [0u64, 50, 200, 1000][rng.gen_range(0..4)];
                rig.feed(vec![
                    ScriptItem::Wait(wait),
                    ScriptItem::Event(InputEvent::Mouse(MouseEvent::press(x, y))),
                    ScriptItem::Event(InputEvent::Mouse(MouseEvent::release(x, y))),
                ]);
            }
            let s = rig.scr.widget::<ScrollBar>(bar).unwrap().state();
            if s.value() < s.min() || s.value() > s.max() {
                return Err(format!("event {i}: value {} outside [{}, {}]", s.value(), s.min(), s.max()));
            }
            distinct.insert((bar, s.value()));
        }
    }
    Ok(format!("2 x 10000 events, values stayed in range ({} distinct values seen)", distinct.len()))
}

// ---- 12 ---------------------------------------------------------------

/// Paints `@` over the tree's rows so the next step shows which rows it
/// repainted, runs `step`, and returns the repainted view rows.
fn repainted_rows(rig: &mut Rig, tree: WidgetId, step: impl FnOnce(&mut Rig)) -> Vec<usize> {
    let inner = rect_of(&rig.scr, tree).inset(1);
    for (x, y) in inner.cells() {
        rig.fb.put_cell(x, y, Cell::with_colors('@', Color::Yellow, Color::Red));
    }
    rig.fb.flush(&mut rig.session).unwrap();
    step(rig);
    let snap = rig.snap();
    let rows = (inner.y..=inner.bottom())
        .filter(|&y| (inner.x..=inner.right()).any(|x| snap.cell(x, y).glyph != '@'))
        .map(|y| (y - inner.y) as usize)
        .collect();
    rig.scr.damage(inner);
    rig.run();
    rows
}

fn tree_repaint_budget() -> Outcome {
    let mut rig = Rig::new(build_tree_demo);
    let trees = rig.widgets_of("TreeView");
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let nav_keys = [KeyCode::Up, KeyCode::Down, KeyCode::Home, KeyCode::End];
    let (mut nav_steps, mut toggles, mut scrolled) = (0, 0, 0);
    for step in 0..400 {
        let tree = trees[rng.gen_range(0..2)];
        rig.scr.set_focus(tree);
        rig.run();
        let (top, len, cur) = {
            let t = rig.scr.widget::<TreeView>(tree).unwrap().state();
            (t.scroll_top(), t.rows().len(), t.current())
        };
        let view = rect_of(&rig.scr, tree).h as usize - 2;
        let kind = rng.gen_range(0..5);
        // (what, toggled view row if any)
        let (what, toggled, rows) = match kind {
            0 => {
                let k = nav_keys[rng.gen_range(0..nav_keys.len())];
                ("key", None, repainted_rows(&mut rig, tree, |r| { r.key(k); }))
            }
            1 => {
                let row = rng.gen_range(top..len.min(top + view));
                let rr = rig.scr.widget::<TreeView>(tree).unwrap().row_rect(row).unwrap();
                let t = rig.scr.widget::<TreeView>(tree).unwrap().state();
                let label_x = rr.x + (t.row_text(row).unwrap().len() - t.label(row).unwrap().len()) as i32;
                ("click", None, repainted_rows(&mut rig, tree, |r| { r.click(label_x, rr.y); }))
            }
            2 => {
                let has_children = rig.scr.widget::<TreeView>(tree).unwrap().state().node(cur).unwrap().has_children();
                if !has_children {
                    continue;
                }
                let k = [KeyCode::Enter, KeyCode::Space][rng.gen_range(0..2)];
                ("toggle key", Some(cur - top), repainted_rows(&mut rig, tree, |r| { r.key(k); }))
            }
            _ => {
                let (row, span) = {
                    let t = rig.scr.widget::<TreeView>(tree).unwrap().state();
                    let rows: Vec<usize> = (top..len.min(top + view)).filter(|&r| t.glyph_span(r).is_some()).collect();
                    let row = rows[rng.gen_range(0..rows.len())];
                    (row, t.glyph_span(row).unwrap())
                };
                let rr = rig.scr.widget::<TreeView>(tree).unwrap().row_rect(row).unwrap();
                let x = rr.x + rng.gen_range(span.0..span.1) as i32;
                ("toggle click", Some(row - top), repainted_rows(&mut rig, tree, |r| { r.click(x, rr.y); }))
            }
        };
        let new_top = rig.scr.widget::<TreeView>(tree).unwrap().state().scroll_top();
        if new_top != top {
            scrolled += 1;
            continue;
        }
        match toggled {
            None => {
                nav_steps += 1;
                if rows.len() > 2 {
                    return Err(format!("step {step} ({what}): repainted rows {rows:?}"));
                }
            }
            Some(t) => {
                toggles += 1;
                if rows.iter().any(|&r| r < t) {
                    return Err(format!("step {step} ({what}) on view row {t}: repainted rows {rows:?}"));
                }
            }
        }
    }
    Ok(format!("{nav_steps} navigation steps repainted at most 2 rows, {toggles} toggles repainted only downward ({scrolled} scrolling steps skipped)"))
}

// ---- 13 ---------------------------------------------------------------

fn windows_events() -> Vec<ScriptItem> {
    let mut v = vec![
        ScriptItem::Event(InputEvent::Key(KeyCode::Tab)),
        ScriptItem::Event(InputEvent::Key(KeyCode::F(12))),
        ScriptItem::Event(InputEvent::Key(KeyCode::Char('x'))),
        ScriptItem::Event(InputEvent::Key(KeyCode::Tab)),
    ];
    v.extend(click_items(50, 3));
    v.extend(click_items(45, 10));
    v.push(ScriptItem::Event(InputEvent::Key(KeyCode::Down)));
    v
}

fn leak_endurance() -> Outcome {
    let started = Instant::now();
    let reg = HandlerRegistry::new_shared();
    let menu = Rig::with_registry(build_main_menu, reg.clone(), SIZE);
    let baseline = reg.borrow().len();
    let mut per_event: Vec<Vec<u64>> = Vec::new();
    for round in 1..=10 {
        for d in &DEMOS {
            let scr = build_demo(d.number, &reg, SIZE).map_err(|e| e.to_string())?;
            let mut rig = Rig::from_screen(reg.clone(), scr);
            if d.number == 4 {
                let mut counts = Vec::new();
                for item in windows_events() {
                    reg.borrow_mut().reset_scanned();
                    rig.feed(vec![item]);
                    counts.push(reg.borrow().scanned());
                }
                per_event.push(counts);
            } else {
                rig.script("KEY TAB\nKEY DOWN\nKEY TAB\nWAIT 1000\nMOUSE PRESS LEFT 10 10\nMOUSE RELEASE LEFT 10 10\n");
            }
            rig.key(KeyCode::Esc);
            drop(rig);
            let now = reg.borrow().len();
            if now != baseline {
                return Err(format!("round {round}, demo {}: registry holds {now}, baseline {baseline}", d.number));
            }
        }
    }
    drop(menu);
    if reg.borrow().len() != 0 {
        return Err("registry not empty after the main menu closed".into());
    }
    if per_event[0] != per_event[9] {
        return Err(format!("dispatch scans differ: round 1 {:?}, round 10 {:?}", per_event[0], per_event[9]));
    }
    within(Duration::from_secs(30), started)?;
    Ok(format!("80 open/close cycles at baseline {baseline}; per-event scans {:?} in rounds 1 and 10", per_event[0]))
}

// ---- 14 ---------------------------------------------------------------

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

/// Compares against `tests/golden/<name>.txt` and `.colors`; with
/// `UPDATE_GOLDENS=1` the files are rewritten instead.
fn check_golden(name: &str, snap: &GridSnapshot) -> Result<(), String> {
    let dir = golden_dir();
    let (txt, colors) = (dir.join(format!("{name}.txt")), dir.join(format!("{name}.colors")));
    if std::env::var_os("UPDATE_GOLDENS").is_some() {
        std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
        std::fs::write(&txt, snap.text()).map_err(|e| e.to_string())?;
        std::fs::write(&colors, snap.color_map()).map_err(|e| e.to_string())?;
        return Ok(());
    }
    let want = std::fs::read_to_string(&txt).map_err(|e| format!("{}: {e}", txt.display()))?;
    if want != snap.text() {
        return Err(format!("{name}: text differs from the golden\n{}", snap.text()));
    }
    let want = std::fs::read_to_string(&colors).map_err(|e| format!("{}: {e}", colors.display()))?;
    if want != snap.color_map() {
        return Err(format!("{name}: colors differ from the golden"));
    }
    Ok(())
}

fn in_order(snap: &GridSnapshot, y: i32, words: &[&str]) -> Result<(), String> {
    let line = snap.row_text(y);
    let mut from = 0;
    for w in words {
        let at = line[from..].find(w).ok_or_else(|| format!("{w:?} missing or out of order in {line:?}"))?;
        from += at + w.len();
    }
    Ok(())
}

fn snapshot_goldens() -> Outcome {
    // main menu
    let rig = Rig::new(build_main_menu);
    let menu = rig.snap();
    let lines = menu_lines();
    let (_, y0) = menu.find(&lines[0]).ok_or("first menu line missing")?;
    for (i, l) in lines.iter().enumerate() {
        if !menu.row_text(y0 + i as i32).contains(l.as_str()) {
            return Err(format!("menu line {l:?} not on row {}", y0 + i as i32));
        }
    }
    if lines.len() != 9 || !menu.contains(PROMPT) {
        return Err("main menu lacks 9 options or the prompt".into());
    }
    check_golden("main_menu", &menu)?;

    // grid header
    let rig = Rig::new(build_grid_demo);
    let grid = rig.snap();
    let (_, hy) = grid.find("Email").ok_or("grid header missing")?;
    in_order(&grid, hy, &["#", "ID", "Name", "Email", "Age", "City"])?;
    check_golden("grid", &grid)?;

    // menu tree
    let mut rig = Rig::new(build_menu_demo);
    in_order(&rig.snap(), 1, &["File", "Edit", "View", "Format", "Help"])?;
    rig.script("KEY F10\nKEY LEFT\nKEY LEFT\nKEY RIGHT\nSNAP font\nKEY ESC\nKEY ESC\n");
    let font = rig.take_snaps().remove(0).1;
    for l in ["Font", "Size", "Arial", "Times New Roman", "Courier New", "Bold", "Italic", "Underline"] {
        if !font.contains(l) {
            return Err(format!("Format > Font lacks {l:?}"));
        }
    }
    check_golden("menu_format_font", &font)?;

    // windows
    let rig = Rig::new(build_windows_demo);
    let wins = rig.snap();
    for t in ["Information", "User Form", "Select Country", "Status"] {
        if !wins.contains(t) {
            return Err(format!("window title {t:?} missing"));
        }
    }
    in_order(&wins, SIZE.rows as i32, &["[Information]", "[User Form]", "[Select Country]", "[Status]"])?;
    check_golden("windows", &wins)?;

    // tabs
    let rig = Rig::new(build_tabs_demo);
    let tabs = rig.snap();
    let (_, ty) = tabs.find("General").ok_or("tab titles missing")?;
    in_order(&tabs, ty, &["General", "Appearance", "Network", "About"])?;
    check_golden("tabs", &tabs)?;

    // controls inventory
    let rig = Rig::new(build_controls_demo);
    let counts: Vec<usize> = ["ProgressBar", "Spinner", "ScrollBar"].iter().map(|k| rig.widgets_of(k).len()).collect();
    if counts != [3, 2, 2] {
        return Err(format!("controls demo has {counts:?} progress bars/spinners/scroll bars"));
    }
    let ctl = rig.snap();
    for t in ["Download:", "Upload:", "Processing:", "Quantity:", "Percentage:", "Horizontal:", "Vertical:"] {
        if !ctl.contains(t) {
            return Err(format!("controls demo lacks {t:?}"));
        }
    }
    check_golden("controls", &ctl)?;
    Ok("6 goldens match: main menu, grid, menu tree, windows, tabs, controls".into())
}

// ---- 15 ---------------------------------------------------------------

/// Clicks inside textbox `tb` and returns the cursor shown by the flush
/// that follows, before any key.
fn cursor_after_click(rig: &mut Rig, tb: WidgetId) -> Result<(), String> {
    let r = rect_of(&rig.scr, tb);
    let (x, y) = (r.x + r.w / 2, r.y);
    let presents = rig.session.headless_ref().unwrap().present_count();
    rig.feed(vec![
        ScriptItem::Wait(common::CLICK_GAP_MS),
        ScriptItem::Event(InputEvent::Mouse(MouseEvent::press(x, y))),
        ScriptItem::Snap("after_click".into()),
        ScriptItem::Event(InputEvent::Mouse(MouseEvent::release(x, y))),
    ]);
    let snap = rig.take_snaps().remove(0).1;
    let after = rig.session.headless_ref().unwrap().present_count();
    match snap.cursor() {
        Some((cx, cy)) if r.contains(cx, cy) => Ok(()),
        other => Err(format!("textbox at {r:?}: cursor {other:?} after the click ({} presents)", after - presents)),
    }
}

fn textbox_cursor() -> Outcome {
    let mut clicked = 0;
    let mut rig = Rig::new(build_form_demo);
    for tb in rig.widgets_of("TextBox") {
        cursor_after_click(&mut rig, tb)?;
        clicked += 1;
    }

    let mut rig = Rig::new(build_tabs_demo);
    let tabs = rig.widgets_of("TabControl")[0];
    for page in 0..4 {
        cellui::nav::switch_tab(&mut rig.scr, tabs, page);
        rig.run();
        let shown: Vec<WidgetId> = rig.widgets_of("TextBox").into_iter().filter(|&t| rig.scr.is_shown(t)).collect();
        for tb in shown {
            // start from a non-text widget so the click is what moves focus
            rig.scr.blur();
            rig.run();
            cursor_after_click(&mut rig, tb)?;
            clicked += 1;
        }
    }

    let mut rig = Rig::new(build_windows_demo);
    for tb in rig.widgets_of("TextBox") {
        rig.key(KeyCode::F(12));
        cursor_after_click(&mut rig, tb)?;
        clicked += 1;
    }
    if clicked < 6 {
        return Err(format!("only {clicked} textboxes found"));
    }
    Ok(format!("{clicked} textboxes in the form, tabs and windows demos show the cursor on the next flush"))
}
