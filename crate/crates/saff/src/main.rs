use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let (out, path) = saff::cli::run(std::env::args_os());
    if out.error {
        eprint!("{}", out.text);
    } else if let Some(path) = path {
        if let Err(e) = std::fs::write(&path, &out.text) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(1);
        }
    } else {
        let mut stdout = std::io::stdout().lock();
        if stdout
            .write_all(out.text.as_bytes())
            .and_then(|()| stdout.flush())
            .is_err()
        {
            return ExitCode::from(1);
        }
    }
    ExitCode::from(out.code as u8)
}
