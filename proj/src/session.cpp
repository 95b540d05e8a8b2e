#include "sphkl/session.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#ifndef SPHKL_DATA_DIR
#define SPHKL_DATA_DIR "data"
#endif

namespace sphkl {

namespace {

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<int> read_ints(const std::string& text, const std::string& where)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (ss >> tok) {
        std::size_t used = 0;
        int x = 0;
        try {
            x = std::stoi(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size())
            throw DatumError(where + "expected an integer, got '" + tok + "'");
        out.push_back(x);
    }
    return out;
}

} // namespace

DatumFile parse_datum(std::istream& in, const std::string& source)
{
    DatumFile f;
    std::map<int, Weight> roots;
    std::map<int, Coweight> coroots;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string where = source + ":" + std::to_string(lineno) + ": ";
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        line = trim(line);
        if (line.empty())
            continue;
        std::string key = line.substr(0, line.find_first_of(" \t"));
        std::string rest = trim(line.substr(key.size()));
        if (key == "rank") {
            auto v = read_ints(rest, where);
            if (v.size() != 1 || v[0] <= 0)
                throw DatumError(where + "rank must be one positive integer");
            f.rank = v[0];
            continue;
        }
        auto colon = rest.find(':');
        if (colon == std::string::npos)
            throw DatumError(where + "expected ':' after '" + key + "'");
        std::string name = trim(rest.substr(0, colon));
        std::string value = trim(rest.substr(colon + 1));
        if (key == "root" || key == "coroot") {
            if (f.rank == 0)
                throw DatumError(where + "'rank' must come first");
            auto idx = read_ints(name, where);
            if (idx.size() != 1 || idx[0] < 1)
                throw DatumError(where + "bad index '" + name + "'");
            auto v = read_ints(value, where);
            if (static_cast<int>(v.size()) != f.rank)
                throw DatumError(where + "expected " + std::to_string(f.rank) + " entries");
            auto& target = key == "root" ? roots : coroots;
            if (!target.emplace(idx[0], v).second)
                throw DatumError(where + "duplicate " + key + " " + name);
        } else if (key == "label") {
            if (name.empty() || value.empty() || value.find_first_of(" \t") != std::string::npos)
                throw DatumError(where + "expected 'label node: symbol'");
            if (!std::isalpha(static_cast<unsigned char>(value[0])) ||
                !std::all_of(value.begin(), value.end(),
                             [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }))
                throw DatumError(where + "bad symbol '" + value + "'");
            if (!f.labels.emplace(name, value).second)
                throw DatumError(where + "duplicate label for " + name);
        } else {
            throw DatumError(where + "unknown key '" + key + "'");
        }
    }
    if (f.rank == 0)
        throw DatumError(source + ": missing 'rank'");
    if (roots.size() != coroots.size())
        throw DatumError(source + ": number of roots and coroots differ");
    int k = 1;
    for (const auto& [i, r] : roots) {
        if (i != k || !coroots.count(i))
            throw DatumError(source + ": roots and coroots must be numbered 1.." + std::to_string(roots.size()));
        f.roots.push_back(r);
        f.coroots.push_back(coroots.at(i));
        ++k;
    }
    return f;
}

DatumFile load_datum(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        // Fall back to the bundled data directory for bare names such as "gl2".
        std::string alt = data_directory() + "/" + path;
        if (path.find('/') == std::string::npos) {
            in.open(alt + (alt.ends_with(".datum") ? "" : ".datum"));
        }
        if (!in)
            throw DatumError("cannot open datum file '" + path + "'");
    }
    return parse_datum(in, path);
}

std::string data_directory()
{
    if (const char* env = std::getenv("SPHKL_DATA_DIR"))
        return env;
    return SPHKL_DATA_DIR;
}

Coweight parse_coweight(const std::string& text, int rank)
{
    Coweight out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        std::size_t used = 0;
        int x = 0;
        try {
            x = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (item.empty() || used != item.size())
            throw std::invalid_argument("coweight '" + text + "': '" + item + "' is not an integer");
        out.push_back(x);
    }
    if (static_cast<int>(out.size()) != rank)
        throw std::invalid_argument("coweight '" + text + "' has " + std::to_string(out.size()) +
                                    " entries, datum rank is " + std::to_string(rank));
    return out;
}

Session::Session(const DatumFile& file, std::optional<std::map<std::string, int>> specialization)
{
    W_ = std::make_unique<AffineWeyl>(RootDatum(file.rank, file.roots, file.coroots));
    const int N = W_->num_nodes();
    std::set<std::string> known;
    for (int a = 0; a < N; ++a)
        known.insert(W_->node_name(a));
    for (const auto& [node, sym] : file.labels)
        if (!known.count(node))
            throw DatumError("label for unknown node '" + node + "'");

    // Unlabelled nodes take the label of a conjugate node, else a fresh symbol per class.
    auto classes = W_->parameter_classes();
    const int num_classes = *std::max_element(classes.begin(), classes.end()) + 1;
    std::vector<std::string> class_label(num_classes);
    for (int a = 0; a < N; ++a) {
        auto it = file.labels.find(W_->node_name(a));
        if (it == file.labels.end())
            continue;
        auto& cl = class_label[classes[a]];
        if (!cl.empty() && cl != it->second)
            throw DatumError("label conflict: class of " + W_->node_name(a) + " is labelled both '" + cl +
                             "' and '" + it->second + "'");
        cl = it->second;
    }
    std::set<std::string> used;
    for (const auto& l : class_label)
        if (!l.empty())
            used.insert(l);
    for (int c = 0; c < num_classes; ++c) {
        if (!class_label[c].empty())
            continue;
        std::string sym = num_classes == 1 ? "v" : "v" + std::to_string(c + 1);
        for (int extra = 0; used.count(sym); ++extra)
            sym = "q" + std::to_string(c + 1 + extra);
        class_label[c] = sym;
        used.insert(sym);
    }
    std::vector<std::string> labels;
    for (int a = 0; a < N; ++a)
        labels.push_back(class_label[classes[a]]);

    params_ = std::make_unique<Parameters>(*W_, std::move(labels), std::move(specialization));
    hecke_ = std::make_unique<HeckeAlgebra>(*params_);
    rep_ = std::make_unique<PolyRep>(*hecke_);
    sph_ = std::make_unique<Spherical>(*rep_);

    if (const char* env = std::getenv("SPHKL_CACHE_LIMIT")) {
        std::size_t limit = std::strtoull(env, nullptr, 10);
        if (limit > 0) {
            W_->set_cache_limit(limit);
            params_->set_cache_limit(limit);
            hecke_->set_cache_limit(limit);
        }
    }
}

Coweight Session::parse_coweight(const std::string& text) const
{
    return sphkl::parse_coweight(text, W_->rank());
}

} // namespace sphkl
