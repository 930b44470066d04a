fn main() {
    // behave like a normal unix tool when the output pipe closes early
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(burau2::cli::main_with_args(std::env::args_os()));
}
