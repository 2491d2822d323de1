#include "mbl/instance_model.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "mbl/util.hpp"

namespace mbl {

namespace {

bool type_order(const InstanceType& a, const InstanceType& b) {
    if (a.features != b.features) return a.features < b.features;
    return a.label < b.label;
}

void check_width(std::size_t width) {
    if (width == 0) throw Error("feature count must be positive");
}

void check_label(const ClassLabel& label) {
    if (label.empty()) throw Error("empty class label");
    if (label.find_first_of("\t\n\r") != std::string::npos) {
        throw Error("class label contains a tab or newline: " + label);
    }
}

}  // namespace

TypeBase::TypeBase(std::size_t width, std::vector<InstanceType> types)
    : width_(width), types_(std::move(types)) {
    check_width(width_);
    std::sort(types_.begin(), types_.end(), type_order);
    std::map<ClassLabel, std::uint64_t> counts;
    for (std::size_t i = 0; i < types_.size(); ++i) {
        const auto& t = types_[i];
        if (t.features.size() != width_) throw Error("ragged features");
        if (t.frequency == 0) throw Error("type with zero frequency");
        check_label(t.label);
        if (i > 0 && types_[i - 1].features == t.features && types_[i - 1].label == t.label) {
            throw Error("duplicate instance type " + utf8_encode(t.features) + " " + t.label);
        }
        counts[t.label] += t.frequency;
        token_total_ += t.frequency;
    }
    classes_.reserve(counts.size());
    for (auto& [label, n] : counts) classes_.push_back({label, n});
    class_ids_.reserve(types_.size());
    for (const auto& t : types_) {
        const auto it = std::lower_bound(
            classes_.begin(), classes_.end(), t.label,
            [](const ClassEntry& e, const ClassLabel& l) { return e.label < l; });
        class_ids_.push_back(static_cast<ClassId>(it - classes_.begin()));
    }
    priors_.reserve(classes_.size());
    for (const auto& c : classes_) priors_.push_back(c.tokens);
}

TypeBase::TypeBase(std::size_t width, std::vector<InstanceType> types, std::span<const ClassEntry> priors)
    : TypeBase(width, std::move(types)) {
    for (const auto& p : priors) {
        const auto it = std::lower_bound(
            classes_.begin(), classes_.end(), p.label,
            [](const ClassEntry& e, const ClassLabel& l) { return e.label < l; });
        if (it == classes_.end() || it->label != p.label) continue;
        if (p.tokens < it->tokens) {
            throw Error("class prior for " + p.label + " is below its stored token count");
        }
        priors_[static_cast<std::size_t>(it - classes_.begin())] = p.tokens;
    }
}

std::uint64_t TypeBase::class_tokens(const ClassLabel& label) const {
    const auto it = std::lower_bound(
        classes_.begin(), classes_.end(), label,
        [](const ClassEntry& e, const ClassLabel& l) { return e.label < l; });
    return (it != classes_.end() && it->label == label) ? it->tokens : 0;
}

TypeBase TypeBase::without(std::span<const TypeId> removed) const {
    std::vector<bool> drop(types_.size(), false);
    for (TypeId id : removed) {
        if (id >= types_.size()) throw Error("type id out of range: " + std::to_string(id));
        drop[id] = true;
    }
    std::vector<InstanceType> kept;
    kept.reserve(types_.size());
    for (std::size_t i = 0; i < types_.size(); ++i) {
        if (!drop[i]) kept.push_back(types_[i]);
    }
    std::vector<ClassEntry> priors;
    priors.reserve(classes_.size());
    for (std::size_t c = 0; c < classes_.size(); ++c) priors.push_back({classes_[c].label, priors_[c]});
    return TypeBase(width_, std::move(kept), priors);
}

TypeBase build_type_base(std::span<const InstanceToken> tokens) {
    if (tokens.empty()) throw Error("empty corpus");
    const std::size_t width = tokens.front().features.size();
    std::map<std::pair<FeatureVector, ClassLabel>, std::uint64_t> counts;
    for (const auto& tok : tokens) {
        if (tok.features.size() != width) throw Error("ragged features");
        ++counts[{tok.features, tok.label}];
    }
    std::vector<InstanceType> types;
    types.reserve(counts.size());
    for (auto& [key, n] : counts) types.push_back({key.first, key.second, n});
    return TypeBase(width, std::move(types));
}

bool outranks(const TypeBase& base, TypeId a, TypeId b) {
    const auto& ta = base[a];
    const auto& tb = base[b];
    if (ta.frequency != tb.frequency) return ta.frequency > tb.frequency;
    const auto ca = base.class_prior(base.class_of(a));
    const auto cb = base.class_prior(base.class_of(b));
    if (ca != cb) return ca > cb;
    if (ta.label != tb.label) return ta.label < tb.label;
    return ta.features < tb.features;
}

std::vector<TypeId> find_minority_ambiguities(const TypeBase& base) {
    std::vector<TypeId> minority;
    const auto types = base.types();
    // Types sharing a feature vector are adjacent in id order.
    std::size_t begin = 0;
    while (begin < types.size()) {
        std::size_t end = begin + 1;
        while (end < types.size() && types[end].features == types[begin].features) ++end;
        if (end - begin > 1) {
            TypeId best = begin;
            for (TypeId id = begin + 1; id < end; ++id) {
                if (outranks(base, id, best)) best = id;
            }
            for (TypeId id = begin; id < end; ++id) {
                if (id != best) minority.push_back(id);
            }
        }
        begin = end;
    }
    return minority;
}

MemoryStats memory_stats(std::uint64_t token_total, std::uint64_t type_count,
                         std::size_t width) {
    const std::uint64_t record = width + 1;
    MemoryStats s;
    s.token_bytes = token_total * record;
    s.type_bytes = type_count * record;
    s.type_bytes_with_freq = type_count * (record + kFrequencyFieldBytes);
    if (s.token_bytes > 0) {
        const auto tokens = static_cast<double>(s.token_bytes);
        s.reduction_pct = 100.0 * (1.0 - static_cast<double>(s.type_bytes) / tokens);
        s.reduction_with_freq_pct =
            100.0 * (1.0 - static_cast<double>(s.type_bytes_with_freq) / tokens);
    }
    return s;
}

MemoryStats memory_stats(const TypeBase& base) {
    return memory_stats(base.token_total(), base.size(), base.width());
}

void write_type_base(std::ostream& out, const TypeBase& base) {
    out << "#typebase n=" << base.width() << " tokens=" << base.token_total() << '\n';
    // Priors are only written for classes that lost types to editing.
    const auto classes = base.classes();
    for (ClassId c = 0; c < classes.size(); ++c) {
        if (base.class_prior(c) != classes[c].tokens) {
            out << "#prior\t" << classes[c].label << '\t' << base.class_prior(c) << '\n';
        }
    }
    for (const auto& t : base.types()) {
        out << utf8_encode(t.features) << '\t' << t.label << '\t' << t.frequency << '\n';
    }
}

std::string serialize_type_base(const TypeBase& base) {
    std::ostringstream out;
    write_type_base(out, base);
    return out.str();
}

namespace {

std::uint64_t parse_count(std::string_view text, const std::string& what) {
    std::uint64_t value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end || text.empty()) {
        throw Error("malformed " + what + ": '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace

TypeBase read_type_base(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw Error("type base: missing header");
    std::istringstream header(line);
    std::string tag, n_field, tokens_field;
    header >> tag >> n_field >> tokens_field;
    if (tag != "#typebase" || n_field.rfind("n=", 0) != 0 || tokens_field.rfind("tokens=", 0) != 0) {
        throw Error("type base: malformed header '" + line + "'");
    }
    const auto width = parse_count(std::string_view(n_field).substr(2), "width");
    const auto declared = parse_count(std::string_view(tokens_field).substr(7), "token total");

    std::vector<InstanceType> types;
    std::vector<ClassEntry> priors;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto fields = split(line, '\t');
        if (fields.size() == 3 && fields[0] == "#prior") {
            priors.push_back({ClassLabel(fields[1]), parse_count(fields[2], "class prior")});
            continue;
        }
        if (fields.size() != 3) {
            throw Error("type base line " + std::to_string(line_no) + ": expected 3 fields");
        }
        types.push_back({utf8_decode(fields[0]), ClassLabel(fields[1]),
                         parse_count(fields[2], "frequency")});
    }
    TypeBase base(width, std::move(types), priors);
    if (base.token_total() != declared) {
        throw Error("type base: header declares " + std::to_string(declared) +
                    " tokens but frequencies sum to " + std::to_string(base.token_total()));
    }
    return base;
}

TypeBase load_type_base(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open type base " + path);
    return read_type_base(in);
}

void save_type_base(const std::string& path, const TypeBase& base) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    write_type_base(out, base);
}

std::uint64_t checksum(const TypeBase& base) {
    return fnv1a(serialize_type_base(base));
}

}  // namespace mbl
