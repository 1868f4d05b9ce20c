fn main() {
    std::process::exit(signed_perms::cli::run_std());
}
