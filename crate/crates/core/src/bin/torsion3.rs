use std::process::ExitCode;

fn main() -> ExitCode {
    let out = match torsion3::cli::run(std::env::args_os()) {
        Ok(out) => out,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let text = out.to_json();
    match &out.dest {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("cannot write {}: {e}", path.display());
                return ExitCode::from(1);
            }
        }
        None => print!("{text}"),
    }
    if let Some(err) = &out.report.status.error {
        eprintln!("torsion3: {err}");
    }
    ExitCode::from(out.code as u8)
}
