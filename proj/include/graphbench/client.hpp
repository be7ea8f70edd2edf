// Chat-completion client contract: request/result types, the HTTPS client for
// OpenAI-compatible endpoints (bearer auth from a named environment variable,
// retry with backoff, shared rate limiting), and the scripted deterministic
// mock used for offline runs and tests.
#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace graphbench {

struct Message {
    std::string role;  // "system" | "user" | "assistant"
    std::string content;
};

struct GenerationRequest {
    std::string model;
    std::vector<Message> messages;
    double temperature = 0.7;
    double top_p = 1.0;
    int max_tokens = 16384;
    int seed_tag = 42;  // recorded in run metadata; never sent to the provider
    int sample_index = 0;
    std::string instruction_id;  // cache/mock routing metadata, not sent
};

struct ChatResult {
    bool ok = false;
    std::string text;
    std::int64_t prompt_tokens = 0;
    std::int64_t completion_tokens = 0;
    int attempts = 0;
    double latency_ms = 0.0;
    std::string timestamp;  // ISO 8601 UTC; fixed sentinel under the mock
    std::string error;      // permanent-failure diagnostic when !ok
};

struct RetryPolicy {
    int max_attempts = 4;
    double initial_backoff_ms = 250.0;
    double backoff_multiplier = 2.0;
};

struct RateLimit {
    int max_in_flight = 4;
    double min_gap_ms = 0.0;
};

// Secrets policy: only the *name* of the auth variable lives here; the token
// is read from the environment at request time and never serialized.
struct ClientContract {
    std::string endpoint = "https://api.openai.com/v1/chat/completions";
    std::string auth_env = "OPENAI_API_KEY";
    RateLimit rate_limit;
    RetryPolicy retry;
};

class ChatClient {
 public:
    virtual ~ChatClient() = default;
    virtual ChatResult complete(const GenerationRequest& request) = 0;
};

// Provider output cap: 4096 for gpt-3.5-turbo, 16384 otherwise.
int provider_max_tokens(const std::string& model);

// Deterministic token estimate used whenever a provider omits usage counts
// and for all mock accounting: ceil(bytes / 4), minimum 1 for nonempty text.
std::int64_t approx_token_count(const std::string& text);

class HttpChatClient : public ChatClient {
 public:
    explicit HttpChatClient(ClientContract contract);
    ~HttpChatClient() override;
    ChatResult complete(const GenerationRequest& request) override;

 private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// Scripted mock. The script maps a request to the raw response text; token
// accounting, latency (0), and the timestamp sentinel are deterministic, so
// identical runs produce byte-identical caches. fail_next() injects transient
// failures consumed by the shared retry loop (attempts accounting matches the
// HTTP client's).
class MockClient : public ChatClient {
 public:
    using Script = std::function<std::string(const GenerationRequest&)>;
    explicit MockClient(Script script, RetryPolicy retry = {});
    ChatResult complete(const GenerationRequest& request) override;

    // The next `count` attempts fail with `error`; `permanent` failures are
    // not retried (they model 4xx), transient ones are (429/5xx).
    void fail_next(int count, const std::string& error = "simulated 429",
                   bool permanent = false);
    int total_attempts() const { return total_attempts_; }
    int total_requests() const { return total_requests_; }

 private:
    Script script_;
    RetryPolicy retry_;
    int pending_failures_ = 0;
    std::string failure_error_;
    bool failure_permanent_ = false;
    int total_attempts_ = 0;
    int total_requests_ = 0;
    std::mutex mutex_;
};

}  // namespace graphbench
