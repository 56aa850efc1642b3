#include "tlab/config_io.hpp"

#include <json.hpp>
#include <openssl/evp.h>

namespace tlab {

using nlohmann::json;

std::string configuration_to_json(const Configuration& cfg, int indent) {
    const bool rational = cfg.scalar_mode() == ScalarMode::Rational;
    json out;
    out["dimension"] = cfg.dimension();
    out["scalar"] = rational ? "rational" : "f64";
    if (cfg.policy().mode == TolerancePolicy::Mode::Approximate) {
        out["tolerance"] = cfg.policy().rel_eps;
    }
    json balls = json::array();
    for (const Ball& b : cfg.balls()) {
        json center = json::array();
        for (const Scalar& c : b.center.coords()) {
            if (rational) {
                center.push_back(c.to_string());
            } else {
                center.push_back(c.value_f64());
            }
        }
        json jb;
        jb["center"] = std::move(center);
        if (rational) {
            jb["radius"] = b.radius.to_string();
        } else {
            jb["radius"] = b.radius.value_f64();
        }
        balls.push_back(std::move(jb));
    }
    out["balls"] = std::move(balls);
    if (cfg.declared_tangencies()) {
        json pairs = json::array();
        for (const auto& [i, j] : *cfg.declared_tangencies()) {
            pairs.push_back(json::array({i, j}));
        }
        out["declared_tangencies"] = std::move(pairs);
    }
    return indent < 0 ? out.dump() : out.dump(indent);
}

namespace {

Scalar scalar_from_json(const json& value, ScalarMode mode) {
    if (mode == ScalarMode::Rational) {
        if (!value.is_string()) {
            throw UsageError("rational mode requires \"p/q\" string scalars");
        }
        return Scalar::parse(value.get<std::string>(), ScalarMode::Rational);
    }
    if (!value.is_number()) throw UsageError("f64 mode requires number scalars");
    return Scalar::f64(value.get<double>());
}

} // namespace

Configuration configuration_from_json(const std::string& text) {
    json in;
    try {
        in = json::parse(text);
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("configuration JSON parse error: ") + e.what());
    }
    try {
        if (!in.is_object()) throw UsageError("configuration JSON must be an object");
        const int dimension = in.at("dimension").get<int>();
        const std::string scalar = in.at("scalar").get<std::string>();
        if (scalar != "rational" && scalar != "f64") {
            throw UsageError("scalar must be \"rational\" or \"f64\"");
        }
        const ScalarMode mode = scalar == "rational" ? ScalarMode::Rational : ScalarMode::F64;

        TolerancePolicy policy;
        if (in.contains("tolerance")) {
            policy = TolerancePolicy::approximate(in.at("tolerance").get<double>());
        } else if (mode == ScalarMode::Rational) {
            policy = TolerancePolicy::exact();
        } else {
            policy = TolerancePolicy::approximate();
        }

        std::vector<Ball> balls;
        for (const json& jb : in.at("balls")) {
            std::vector<Scalar> center;
            for (const json& c : jb.at("center")) center.push_back(scalar_from_json(c, mode));
            balls.emplace_back(Point(std::move(center)), scalar_from_json(jb.at("radius"), mode));
        }

        std::optional<std::vector<IndexPair>> declared;
        if (in.contains("declared_tangencies")) {
            declared.emplace();
            for (const json& jp : in.at("declared_tangencies")) {
                if (!jp.is_array() || jp.size() != 2) {
                    throw UsageError("declared tangency must be an [i, j] pair");
                }
                declared->emplace_back(jp[0].get<int>(), jp[1].get<int>());
            }
        }
        return Configuration(dimension, std::move(balls), policy, std::move(declared));
    } catch (const json::exception& e) {
        throw UsageError(std::string("malformed configuration JSON: ") + e.what());
    }
}

std::string sha256_hex(std::string_view bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
        throw InvariantBreach("SHA-256 digest failed");
    }
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * length);
    for (unsigned int i = 0; i < length; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 0xF]);
    }
    return out;
}

std::string configuration_digest(const Configuration& cfg) {
    return "sha256:" + sha256_hex(configuration_to_json(cfg));
}

} // namespace tlab
