//! Build a small screen by hand, attach a click handler and drive it.

use cellui::backend::{InputEvent, KeyCode, ScriptItem, Session, TerminalSize};
use cellui::events::{run, HandlerRegistration, HandlerRegistry, Screen, WidgetId};
use cellui::render::FrameBuffer;
use cellui::widgets::{Button, Label, TextBox};

#[derive(Clone, Copy)]
struct Ids {
    name: WidgetId,
    greeting: WidgetId,
}

fn greet(scr: &mut Screen, _id: WidgetId, _ev: &InputEvent) {
    let Some(ids) = scr.state::<Ids>().copied() else { return };
    let name = scr.widget::<TextBox>(ids.name).map(|t| t.text()).unwrap_or_default();
    if let Some(l) = scr.widget_mut::<Label>(ids.greeting) {
        l.set_text(&format!("Hello, {name}!"));
    }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let size = TerminalSize::new(50, 8);
    let registry = HandlerRegistry::new_shared();
    let mut scr = Screen::new(&registry, size);
    scr.register(Label::new(2, 2, "Name:"), &[])?;
    let name = scr.register(TextBox::new(9, 2, 20), &[])?;
    scr.register(Button::new(2, 4, "Greet"), &[HandlerRegistration::click(greet)])?;
    let greeting = scr.register(Label::new(14, 4, "                    "), &[])?;
    scr.set_state(Ids { name, greeting });

    let mut session = Session::headless(size);
    let keys = "Ada".chars().map(KeyCode::Char).chain([KeyCode::Tab, KeyCode::Enter]);
    session
        .headless_mut()
        .expect("headless")
        .push_script(keys.map(|k| ScriptItem::Event(InputEvent::Key(k))));

    let mut fb = FrameBuffer::new(size);
    let exit = run(&mut scr, &mut session, &mut fb);
    println!("loop ended: {exit:?}");
    print!("{}", session.snapshot()?.text());
    Ok(())
}
