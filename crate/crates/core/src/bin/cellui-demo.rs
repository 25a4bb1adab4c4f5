//! Demo gallery launcher.
//!
//! Exit codes: 0 ok, 2 script parse error (or bad arguments), 3 backend error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use cellui::backend::{Session, TerminalSize};
use cellui::demo::{replay, run_gallery, write_snapshots, DemoError, GalleryExit, RunConfig};
use cellui::events::HandlerRegistry;
use cellui::render::{FrameBuffer, GlyphSet};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum BackendArg {
    Ansi,
    Headless,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GlyphsArg {
    Ascii,
    Unicode,
}

#[derive(Debug, Parser)]
#[command(version, about = "Text-mode UI demo gallery")]
struct Args {
    /// Open this demo directly (9 exits).
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=9))]
    demo: Option<u8>,
    #[arg(long, value_enum, default_value = "ansi")]
    backend: BackendArg,
    /// Headless terminal size, e.g. 80x24.
    #[arg(long, value_parser = parse_size, default_value = "80x24")]
    size: TerminalSize,
    /// Input script to replay (headless only).
    #[arg(long)]
    script: Option<PathBuf>,
    /// Where SNAP captures are written (headless only).
    #[arg(long)]
    snapshot_dir: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "ascii")]
    glyphs: GlyphsArg,
}

fn parse_size(s: &str) -> Result<TerminalSize, String> {
    let (c, r) = s.split_once(['x', 'X']).ok_or("expected <cols>x<rows>")?;
    let cols: u16 = c.trim().parse().map_err(|e| format!("cols: {e}"))?;
    let rows: u16 = r.trim().parse().map_err(|e| format!("rows: {e}"))?;
    if cols == 0 || rows == 0 {
        return Err("size must be positive".into());
    }
    Ok(TerminalSize::new(cols, rows))
}

fn main() -> ExitCode {
    let args = Args::parse();
    let cfg = RunConfig {
        demo: args.demo,
        glyphs: match args.glyphs {
            GlyphsArg::Ascii => GlyphSet::Ascii,
            GlyphsArg::Unicode => GlyphSet::Unicode,
        },
    };
    match args.backend {
        BackendArg::Headless => headless(&args, &cfg),
        BackendArg::Ansi => {
            if args.script.is_some() || args.snapshot_dir.is_some() {
                eprintln!("--script and --snapshot-dir need --backend headless");
                return ExitCode::from(2);
            }
            interactive(&cfg)
        }
    }
}

fn headless(args: &Args, cfg: &RunConfig) -> ExitCode {
    let script = match &args.script {
        Some(p) => match std::fs::read_to_string(p) {
            Ok(s) => s,
            Err(e) => {
                eprintln!("cannot read {}: {e}", p.display());
                return ExitCode::from(2);
            }
        },
        None => String::new(),
    };
    let report = match replay(&script, args.size, cfg) {
        Ok(r) => r,
        Err(DemoError::Script(e)) => {
            eprintln!("script error: {e}");
            return ExitCode::from(2);
        }
        Err(e) => {
            eprintln!("{e}");
            return ExitCode::from(3);
        }
    };
    if let Some(dir) = &args.snapshot_dir {
        let mut snaps = report.snaps.clone();
        snaps.push(("final".to_string(), report.last.clone()));
        if let Err(e) = write_snapshots(dir, &snaps) {
            eprintln!("cannot write snapshots: {e}");
            return ExitCode::from(3);
        }
    }
    match report.exit {
        GalleryExit::BackendFailure => ExitCode::from(3),
        _ => ExitCode::SUCCESS,
    }
}

fn interactive(cfg: &RunConfig) -> ExitCode {
    let mut session = match Session::open_real() {
        Ok(s) => s,
        Err(e) => {
            eprintln!("cannot open terminal: {e}");
            return ExitCode::from(3);
        }
    };
    let mut fb = FrameBuffer::new(session.size());
    let registry = HandlerRegistry::new_shared();
    let result = run_gallery(&mut session, &mut fb, &registry, cfg);
    session.close();
    match result {
        Ok(GalleryExit::BackendFailure) => ExitCode::from(3),
        Ok(_) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(3)
        }
    }
}
