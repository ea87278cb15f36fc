//! `momentum`: reads one JSON request, writes one JSON response.
//!
//! ```text
//! echo '{"command": "projective", "group": "A2", "payload": {"hw": [[2, 1]]}}' | momentum --pretty
//! ```
//!
//! Exit status: 0 with a response on success; 2 for an unreadable request,
//! 3 for a domain error, 4 for an unsupported case. Errors are written to
//! stderr as `{"error": {"kind", "message"}}`.

mod error;
mod render;
mod request;

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use crate::error::CliError;
use crate::request::{run, Command, Request};

#[derive(Parser, Debug)]
#[command(name = "momentum", version, about = "Exact momentum polytopes from JSON requests")]
struct Args {
    /// Read the request from FILE instead of stdin.
    #[arg(long = "in", value_name = "FILE")]
    input: Option<PathBuf>,

    /// Write the response to FILE instead of stdout.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,

    /// Also write the SVG of a `render` request to FILE.
    #[arg(long, value_name = "FILE")]
    svg: Option<PathBuf>,

    /// Indent the JSON response.
    #[arg(long)]
    pretty: bool,
}

fn execute(args: &Args) -> Result<(), CliError> {
    let text = match &args.input {
        Some(path) => fs::read_to_string(path)
            .map_err(|e| CliError::parse(format!("cannot read {}: {e}", path.display())))?,
        None => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| CliError::parse(format!("cannot read stdin: {e}")))?;
            s
        }
    };
    let req = Request::parse(&text)?;
    if args.svg.is_some() && req.command != Command::Render {
        return Err(CliError::parse("--svg applies to render requests only"));
    }
    let resp = run(&req)?;
    let mut doc = if args.pretty {
        serde_json::to_string_pretty(&resp.json)
    } else {
        serde_json::to_string(&resp.json)
    }
    .expect("JSON values serialize");
    doc.push('\n');
    if let (Some(path), Some(svg)) = (&args.svg, &resp.svg) {
        fs::write(path, svg)?;
    }
    match &args.out {
        Some(path) => fs::write(path, doc)?,
        None => io::stdout().write_all(doc.as_bytes())?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let args = Args::parse();
    match execute(&args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{}", e.to_json());
            ExitCode::from(e.exit_code())
        }
    }
}
