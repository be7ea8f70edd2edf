// Chat-completion clients: HTTPS (OpenAI-compatible wire format) and the
// scripted deterministic mock. Shared retry/backoff semantics live here so
// both clients count attempts identically.
#include "graphbench/client.hpp"

#include <chrono>
#include <condition_variable>
#include <cstdlib>
#include <cctype>
#include <ctime>
#include <stdexcept>
#include <thread>

#include <httplib.h>
#include <json.hpp>

namespace graphbench {

namespace {

using njson = nlohmann::json;

std::string iso_utc_now() {
    const std::time_t now = std::time(nullptr);
    std::tm utc{};
    gmtime_r(&now, &utc);
    char buffer[32];
    std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &utc);
    return buffer;
}

struct SplitUrl {
    std::string host;  // scheme://host[:port]
    std::string path;  // /v1/chat/completions
};

SplitUrl split_url(const std::string& url) {
    const std::size_t scheme = url.find("://");
    if (scheme == std::string::npos)
        throw std::invalid_argument("endpoint must include a scheme: " + url);
    const std::size_t slash = url.find('/', scheme + 3);
    if (slash == std::string::npos) return {url, "/v1/chat/completions"};
    return {url.substr(0, slash), url.substr(slash)};
}

bool transient_status(int status) { return status == 429 || status >= 500; }

}  // namespace

int provider_max_tokens(const std::string& model) {
    std::string lower = model;
    for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (lower.rfind("gpt-3.5", 0) == 0) return 4096;
    return 16384;
}

std::int64_t approx_token_count(const std::string& text) {
    if (text.empty()) return 0;
    return static_cast<std::int64_t>((text.size() + 3) / 4);
}

// ---------------------------------------------------------------------------
// HTTP client

struct HttpChatClient::Impl {
    ClientContract contract;
    SplitUrl url;
    std::string token;  // held in memory only

    std::mutex gate_mutex;
    std::condition_variable gate_cv;
    int in_flight = 0;
    std::chrono::steady_clock::time_point last_request =
        std::chrono::steady_clock::now() - std::chrono::hours(1);

    explicit Impl(ClientContract c) : contract(std::move(c)), url(split_url(contract.endpoint)) {
        if (const char* value = std::getenv(contract.auth_env.c_str())) token = value;
    }

    void acquire() {
        std::unique_lock lock(gate_mutex);
        gate_cv.wait(lock, [&] { return in_flight < contract.rate_limit.max_in_flight; });
        ++in_flight;
        const auto gap = std::chrono::duration<double, std::milli>(
            std::chrono::steady_clock::now() - last_request);
        const double wait_ms = contract.rate_limit.min_gap_ms - gap.count();
        if (wait_ms > 0) {
            lock.unlock();
            std::this_thread::sleep_for(std::chrono::duration<double, std::milli>(wait_ms));
            lock.lock();
        }
        last_request = std::chrono::steady_clock::now();
    }

    void release() {
        {
            std::lock_guard lock(gate_mutex);
            --in_flight;
        }
        gate_cv.notify_one();
    }
};

HttpChatClient::HttpChatClient(ClientContract contract)
    : impl_(std::make_unique<Impl>(std::move(contract))) {}

HttpChatClient::~HttpChatClient() = default;

ChatResult HttpChatClient::complete(const GenerationRequest& request) {
    ChatResult result;
    result.timestamp = iso_utc_now();
    if (impl_->token.empty()) {
        result.attempts = 0;
        result.error = "auth token not set: export " + impl_->contract.auth_env;
        return result;
    }

    njson body;
    body["model"] = request.model;
    body["messages"] = njson::array();
    for (const Message& m : request.messages)
        body["messages"].push_back({{"role", m.role}, {"content", m.content}});
    body["temperature"] = request.temperature;
    body["top_p"] = request.top_p;
    body["max_tokens"] = request.max_tokens;
    const std::string payload = body.dump();

    const RetryPolicy& retry = impl_->contract.retry;
    double backoff_ms = retry.initial_backoff_ms;
    const auto start = std::chrono::steady_clock::now();

    for (int attempt = 1; attempt <= retry.max_attempts; ++attempt) {
        result.attempts = attempt;
        impl_->acquire();
        httplib::Client http(impl_->url.host);
        http.set_connection_timeout(30);
        http.set_read_timeout(600);
        httplib::Headers headers{{"Authorization", "Bearer " + impl_->token}};
        auto response = http.Post(impl_->url.path, headers, payload, "application/json");
        impl_->release();

        bool retryable = false;
        if (!response) {
            result.error = "transport error: " + httplib::to_string(response.error());
            retryable = true;
        } else if (response->status != 200) {
            result.error = "http " + std::to_string(response->status) + ": " +
                           response->body.substr(0, 200);
            retryable = transient_status(response->status);
        } else {
            try {
                njson parsed = njson::parse(response->body);
                result.text = parsed.at("choices").at(0).at("message").at("content")
                                  .get<std::string>();
                if (parsed.contains("usage")) {
                    const njson& usage = parsed["usage"];
                    result.prompt_tokens = usage.value("prompt_tokens", std::int64_t{0});
                    result.completion_tokens = usage.value("completion_tokens", std::int64_t{0});
                }
                if (result.completion_tokens == 0)
                    result.completion_tokens = approx_token_count(result.text);
                result.ok = true;
                result.error.clear();
            } catch (const std::exception& e) {
                result.error = std::string("malformed response body: ") + e.what();
                retryable = false;
            }
        }
        if (result.ok || !retryable) break;
        if (attempt < retry.max_attempts) {
            std::this_thread::sleep_for(
                std::chrono::duration<double, std::milli>(backoff_ms));
            backoff_ms *= retry.backoff_multiplier;
        }
    }

    if (!result.ok) result.text.clear();  // permanent failure carries no partial text
    result.latency_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return result;
}

// ---------------------------------------------------------------------------
// Mock client

MockClient::MockClient(Script script, RetryPolicy retry)
    : script_(std::move(script)), retry_(retry) {
    if (!script_) throw std::invalid_argument("MockClient needs a script");
}

void MockClient::fail_next(int count, const std::string& error, bool permanent) {
    std::lock_guard lock(mutex_);
    pending_failures_ = count;
    failure_error_ = error;
    failure_permanent_ = permanent;
}

ChatResult MockClient::complete(const GenerationRequest& request) {
    std::lock_guard lock(mutex_);
    ++total_requests_;
    ChatResult result;
    result.timestamp = "1970-01-01T00:00:00Z";
    for (int attempt = 1; attempt <= retry_.max_attempts; ++attempt) {
        result.attempts = attempt;
        ++total_attempts_;
        if (pending_failures_ > 0) {
            --pending_failures_;
            result.error = failure_error_;
            if (failure_permanent_) break;
            continue;  // transient: retry without sleeping
        }
        result.text = script_(request);
        std::int64_t prompt_bytes = 0;
        for (const Message& m : request.messages) prompt_bytes += m.content.size();
        result.prompt_tokens = (prompt_bytes + 3) / 4;
        result.completion_tokens = approx_token_count(result.text);
        result.ok = true;
        result.error.clear();
        break;
    }
    if (!result.ok) result.text.clear();
    return result;
}

}  // namespace graphbench
