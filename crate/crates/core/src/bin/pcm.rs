fn main() {
    std::process::exit(pcm_axioms::cli::run(std::env::args_os()));
}
