#include "unipy/process.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <mutex>

#include "unipy/error.hpp"

extern char** environ;

namespace unipy::process {

namespace {

class Fd {
public:
    Fd() = default;
    explicit Fd(int fd) : fd_(fd) {}
    Fd(const Fd&) = delete;
    Fd& operator=(const Fd&) = delete;
    Fd(Fd&& o) noexcept : fd_(o.release()) {}
    Fd& operator=(Fd&& o) noexcept {
        reset(o.release());
        return *this;
    }
    ~Fd() { reset(); }

    int get() const { return fd_; }
    explicit operator bool() const { return fd_ >= 0; }
    int release() {
        const int fd = fd_;
        fd_ = -1;
        return fd;
    }
    void reset(int fd = -1) {
        if (fd_ >= 0) ::close(fd_);
        fd_ = fd;
    }

private:
    int fd_ = -1;
};

struct Pipe {
    Fd read;
    Fd write;
};

Pipe make_pipe() {
    int fds[2];
    if (::pipe2(fds, O_CLOEXEC) != 0) throw SpawnError(std::string("pipe: ") + std::strerror(errno));
    return {Fd(fds[0]), Fd(fds[1])};
}

class SpawnActions {
public:
    SpawnActions() { posix_spawn_file_actions_init(&actions_); }
    ~SpawnActions() { posix_spawn_file_actions_destroy(&actions_); }
    SpawnActions(const SpawnActions&) = delete;
    SpawnActions& operator=(const SpawnActions&) = delete;

    void dup(int from, int to) { posix_spawn_file_actions_adddup2(&actions_, from, to); }
    void open_null(int to) { posix_spawn_file_actions_addopen(&actions_, to, "/dev/null", O_RDONLY, 0); }
    const posix_spawn_file_actions_t* get() const { return &actions_; }

private:
    posix_spawn_file_actions_t actions_;
};

void ignore_sigpipe_once() {
    static std::once_flag flag;
    std::call_once(flag, [] { ::signal(SIGPIPE, SIG_IGN); });
}

}  // namespace

Result run(const Spec& spec) {
    if (spec.argv.empty()) throw SpawnError("no program to run");
    ignore_sigpipe_once();

    std::optional<Pipe> in_pipe, out_pipe, err_pipe;
    SpawnActions actions;
    if (spec.stdin_data) {
        in_pipe = make_pipe();
        actions.dup(in_pipe->read.get(), STDIN_FILENO);
    } else if (!spec.inherit_stdin) {
        actions.open_null(STDIN_FILENO);
    }
    if (spec.capture_stdout) {
        out_pipe = make_pipe();
        actions.dup(out_pipe->write.get(), STDOUT_FILENO);
    }
    if (spec.capture_stderr) {
        err_pipe = make_pipe();
        actions.dup(err_pipe->write.get(), STDERR_FILENO);
    }

    std::vector<char*> argv;
    for (const auto& a : spec.argv) argv.push_back(const_cast<char*>(a.c_str()));
    argv.push_back(nullptr);

    const auto start = std::chrono::steady_clock::now();
    pid_t pid = 0;
    const int rc = ::posix_spawn(&pid, argv[0], actions.get(), nullptr, argv.data(), environ);
    if (rc != 0) {
        throw SpawnError("cannot start " + spec.argv[0] + ": " + std::strerror(rc));
    }

    // Parent keeps only its ends.
    if (in_pipe) in_pipe->read.reset();
    if (out_pipe) out_pipe->write.reset();
    if (err_pipe) err_pipe->write.reset();

    Result result;
    Fd in_fd = in_pipe ? std::move(in_pipe->write) : Fd();
    Fd out_fd = out_pipe ? std::move(out_pipe->read) : Fd();
    Fd err_fd = err_pipe ? std::move(err_pipe->read) : Fd();
    std::string_view pending = spec.stdin_data ? std::string_view(*spec.stdin_data) : std::string_view();
    if (in_fd) {
        ::fcntl(in_fd.get(), F_SETFL, ::fcntl(in_fd.get(), F_GETFL) | O_NONBLOCK);
        if (pending.empty()) in_fd.reset();
    }

    char buf[65536];
    while (in_fd || out_fd || err_fd) {
        pollfd fds[3];
        nfds_t n = 0;
        int in_slot = -1, out_slot = -1, err_slot = -1;
        if (in_fd) { in_slot = static_cast<int>(n); fds[n++] = {in_fd.get(), POLLOUT, 0}; }
        if (out_fd) { out_slot = static_cast<int>(n); fds[n++] = {out_fd.get(), POLLIN, 0}; }
        if (err_fd) { err_slot = static_cast<int>(n); fds[n++] = {err_fd.get(), POLLIN, 0}; }
        if (::poll(fds, n, -1) < 0) {
            if (errno == EINTR) continue;
            break;
        }
        if (in_slot >= 0 && fds[in_slot].revents != 0) {
            const ssize_t w = ::write(in_fd.get(), pending.data(), pending.size());
            if (w > 0) pending.remove_prefix(static_cast<std::size_t>(w));
            if ((w < 0 && errno != EAGAIN && errno != EINTR) || pending.empty()) in_fd.reset();
        }
        auto drain = [&](int slot, Fd& fd, std::string& sink) {
            if (slot < 0 || fds[slot].revents == 0) return;
            const ssize_t r = ::read(fd.get(), buf, sizeof buf);
            if (r > 0) sink.append(buf, static_cast<std::size_t>(r));
            else if (r == 0 || (errno != EAGAIN && errno != EINTR)) fd.reset();
        };
        drain(out_slot, out_fd, result.out);
        drain(err_slot, err_fd, result.err);
    }

    int status = 0;
    while (::waitpid(pid, &status, 0) < 0 && errno == EINTR) {
    }
    result.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    else if (WIFSIGNALED(status)) result.exit_code = 128 + WTERMSIG(status);
    return result;
}

std::optional<std::filesystem::path> find_executable(const std::string& name) {
    if (name.empty()) return std::nullopt;
    if (name.find('/') != std::string::npos) {
        if (::access(name.c_str(), X_OK) == 0) return std::filesystem::path(name);
        return std::nullopt;
    }
    const char* path = std::getenv("PATH");
    std::string_view dirs = path != nullptr ? path : "/usr/local/bin:/usr/bin:/bin";
    while (true) {
        const auto colon = dirs.find(':');
        std::string dir(dirs.substr(0, colon));
        if (dir.empty()) dir = ".";
        const auto candidate = std::filesystem::path(dir) / name;
        std::error_code ec;
        if (std::filesystem::is_regular_file(candidate, ec) && ::access(candidate.c_str(), X_OK) == 0) {
            return candidate;
        }
        if (colon == std::string_view::npos) break;
        dirs.remove_prefix(colon + 1);
    }
    return std::nullopt;
}

}  // namespace unipy::process
