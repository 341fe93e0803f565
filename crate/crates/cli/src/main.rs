fn main() -> std::process::ExitCode {
    parkspace_cli::main_entry()
}
