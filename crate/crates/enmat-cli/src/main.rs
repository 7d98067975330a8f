use std::process::ExitCode;

fn main() -> ExitCode {
    enmat_cli::run_main()
}
