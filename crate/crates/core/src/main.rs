fn main() -> std::process::ExitCode {
    regcomp::cli::main()
}
