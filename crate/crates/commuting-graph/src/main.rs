use std::process::ExitCode;

fn main() -> ExitCode {
    commuting_graph::cli::main()
}
