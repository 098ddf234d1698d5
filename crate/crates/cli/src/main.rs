use std::io::{Read, Write};
use std::process::ExitCode;

use alternator_cli::{cmd_gen, cmd_label, cmd_run, cmd_verify, Cli, Command, Output, EXIT_INPUT};
use anyhow::Context;
use clap::Parser;

fn read_input(path: Option<&str>) -> anyhow::Result<String> {
    match path {
        None | Some("-") => {
            let mut text = String::new();
            std::io::stdin().read_to_string(&mut text).context("reading standard input")?;
            Ok(text)
        }
        Some(p) => std::fs::read_to_string(p).with_context(|| format!("reading {p}")),
    }
}

fn dispatch(cli: Cli) -> anyhow::Result<Output> {
    Ok(match cli.command {
        Command::Label { input, format } => cmd_label(&read_input(input.as_deref())?, format),
        Command::Run(args) => {
            let out = cmd_run(&read_input(args.input.as_deref())?, &args);
            if let (Some(path), Some(dot)) = (&args.emit_graph, &out.graph) {
                std::fs::write(path, dot).with_context(|| format!("writing {path}"))?;
            }
            out
        }
        Command::Gen(args) => cmd_gen(&args),
        Command::Verify { original, result, circles } => {
            let original =
                std::fs::read_to_string(&original).with_context(|| format!("reading {original}"))?;
            cmd_verify(&original, &read_input(result.as_deref())?, circles)
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT as u8 } else { 0 });
        }
    };
    match dispatch(cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            let _ = std::io::stdout().flush();
            eprint!("{}", out.stderr);
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT as u8)
        }
    }
}
