use std::process::ExitCode;

fn main() -> ExitCode {
    let env_caps = std::env::var("MEROLIB_CAPS").ok();
    let out = merolib::cli::run_args(std::env::args_os(), env_caps.as_deref());
    if out.code == merolib::cli::EXIT_USAGE {
        eprintln!("{}", out.output);
    } else {
        println!("{}", out.output);
    }
    ExitCode::from(out.code as u8)
}
