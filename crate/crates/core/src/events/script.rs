//! Input scripts for replay.
//!
//! One item per line:
//!
//! ```text
//! KEY <name>                                  ENTER, ESC, TAB, UP, F10, ...
//! CHAR <c>                                    a single printable character
//! MOUSE <PRESS|RELEASE> <LEFT|MIDDLE|RIGHT> <x> <y>
//! WAIT <ms>                                   advances the virtual clock
//! SNAP <name>                                 records the screen
//! ```
//!
//! Blank lines and lines starting with `#` are ignored.

use thiserror::Error;

use crate::backend::{InputEvent, KeyCode, MouseButton, MouseEvent, MouseKind, ScriptItem};

#[derive(Debug, Error, PartialEq, Eq)]
#[error("script line {line}: {message}")]
pub struct ScriptError {
    pub line: usize,
    pub message: String,
}

pub fn parse_script(text: &str) -> Result<Vec<ScriptItem>, ScriptError> {
    let mut items = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        items.push(parse_line(line).map_err(|message| ScriptError { line: i + 1, message })?);
    }
    Ok(items)
}

fn parse_line(line: &str) -> Result<ScriptItem, String> {
    let (cmd, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
    let rest = rest.trim();
    match cmd {
        "KEY" => KeyCode::from_name(rest)
            .map(|k| ScriptItem::Event(InputEvent::Key(k)))
            .ok_or_else(|| format!("unknown key name {rest:?}")),
        "CHAR" => {
            let mut chars = rest.chars();
            match (chars.next(), chars.next()) {
                (Some(c), None) => Ok(ScriptItem::Event(InputEvent::Key(KeyCode::Char(c)))),
                _ => Err(format!("CHAR needs exactly one character, got {rest:?}")),
            }
        }
        "MOUSE" => parse_mouse(rest).map(|m| ScriptItem::Event(InputEvent::Mouse(m))),
        "WAIT" => rest.parse::<u64>().map(ScriptItem::Wait).map_err(|_| format!("bad WAIT duration {rest:?}")),
        "SNAP" => {
            let ok = !rest.is_empty()
                && rest.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-' || c == '.')
                && !rest.starts_with('.');
            if ok {
                Ok(ScriptItem::Snap(rest.to_string()))
            } else {
                Err(format!("bad snapshot name {rest:?}"))
            }
        }
        _ => Err(format!("unknown command {cmd:?}")),
    }
}

fn parse_mouse(rest: &str) -> Result<MouseEvent, String> {
    let parts: Vec<&str> = rest.split_whitespace().collect();
    let [kind, button, x, y] = parts[..] else {
        return Err("MOUSE needs <PRESS|RELEASE> <button> <x> <y>".into());
    };
    let kind = match kind {
        "PRESS" => MouseKind::Press,
        "RELEASE" => MouseKind::Release,
        _ => return Err(format!("bad mouse action {kind:?}")),
    };
    let button = match button {
        "LEFT" => MouseButton::Left,
        "MIDDLE" => MouseButton::Middle,
        "RIGHT" => MouseButton::Right,
        _ => return Err(format!("bad mouse button {button:?}")),
    };
    let coord = |s: &str| s.parse::<i32>().ok().filter(|&v| v >= 1).ok_or_else(|| format!("bad coordinate {s:?}"));
    Ok(MouseEvent { x: coord(x)?, y: coord(y)?, button, kind })
}

/// Renders items back into script text; `parse_script` inverts it.
pub fn format_script(items: &[ScriptItem]) -> String {
    let mut out = String::new();
    for item in items {
        let line = match item {
            ScriptItem::Event(InputEvent::Key(KeyCode::Char(c))) => format!("CHAR {c}"),
            ScriptItem::Event(InputEvent::Key(k)) => format!("KEY {}", k.name()),
            ScriptItem::Event(InputEvent::Mouse(m)) => {
                let kind = match m.kind {
                    MouseKind::Press => "PRESS",
                    MouseKind::Release => "RELEASE",
                };
                let button = match m.button {
                    MouseButton::Left => "LEFT",
                    MouseButton::Middle => "MIDDLE",
                    MouseButton::Right => "RIGHT",
                };
                format!("MOUSE {kind} {button} {} {}", m.x, m.y)
            }
            ScriptItem::Event(_) => continue,
            ScriptItem::Wait(ms) => format!("WAIT {ms}"),
            ScriptItem::Snap(name) => format!("SNAP {name}"),
        };
        out.push_str(&line);
        out.push('\n');
    }
    out
}
