#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "httplib.h"

#include "permstats/oeis.hpp"

namespace permstats {

HttpGet default_http_transport()
{
    return [](const std::string& host, const std::string& path) {
        httplib::Client client("https://" + host);
        client.set_connection_timeout(10);
        client.set_read_timeout(30);
        client.set_follow_location(true);
        auto result = client.Get(path);
        if (!result) {
            throw OeisOffline("cannot reach " + host + ": " + httplib::to_string(result.error()));
        }
        return HttpResponse{result->status, result->body};
    };
}

} // namespace permstats
