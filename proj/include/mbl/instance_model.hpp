#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace mbl {

using Symbol = char32_t;
/// Fixed-width window of letters; windowed vectors have odd width with the focus letter in the middle.
using FeatureVector = std::u32string;
/// Composite phoneme + stress label such as "/b/1". Compared bytewise.
using ClassLabel = std::string;
using TypeId = std::size_t;
using ClassId = std::uint32_t;

inline constexpr Symbol kPadding = U'_';

struct InstanceToken {
    FeatureVector features;
    ClassLabel label;
    std::size_t word_id = 0;
    std::size_t position = 0;
};

struct InstanceType {
    FeatureVector features;
    ClassLabel label;
    std::uint64_t frequency = 1;

    friend bool operator==(const InstanceType&, const InstanceType&) = default;
};

struct ClassEntry {
    ClassLabel label;
    std::uint64_t tokens = 0;
};

/// Deduplicated training memory. Immutable once constructed: every accessor
/// is const and safe to call from several threads at once.
///
/// Types are kept sorted by (feature string, class label); a TypeId is the
/// index into that order, so ids are stable for a given base.
class TypeBase {
public:
    TypeBase() = default;

    /// Validates and sorts `types`. Throws Error on duplicate (features, class)
    /// pairs, zero frequencies, width mismatches, or a zero width. Even widths
    /// are accepted here; windowing is what requires a middle position.
    TypeBase(std::size_t width, std::vector<InstanceType> types);
    /// As above, with tie-break priors carried over from a training set. Each
    /// prior must cover a class present in `types` and be at least that
    /// class's stored token count; entries for absent classes are ignored.
    TypeBase(std::size_t width, std::vector<InstanceType> types, std::span<const ClassEntry> priors);

    std::size_t width() const noexcept { return width_; }
    std::size_t size() const noexcept { return types_.size(); }
    bool empty() const noexcept { return types_.empty(); }
    std::uint64_t token_total() const noexcept { return token_total_; }

    std::span<const InstanceType> types() const noexcept { return types_; }
    const InstanceType& operator[](TypeId id) const { return types_[id]; }

    /// Class inventory in lexicographic label order with per-class token counts.
    std::span<const ClassEntry> classes() const noexcept { return classes_; }
    ClassId class_of(TypeId id) const { return class_ids_[id]; }
    std::uint64_t class_tokens(ClassId cls) const { return classes_[cls].tokens; }
    /// Token count of `label`, or 0 when the class does not occur.
    std::uint64_t class_tokens(const ClassLabel& label) const;
    /// Token count of the class in the training set the base was built from.
    /// Equal to class_tokens() unless types have since been edited out.
    std::uint64_t class_prior(ClassId cls) const { return priors_[cls]; }

    /// A new base holding every type except the listed ids. Class priors are
    /// kept, so tie-breaks among the remaining types do not change.
    TypeBase without(std::span<const TypeId> removed) const;

    friend bool operator==(const TypeBase& a, const TypeBase& b) {
        return a.width_ == b.width_ && a.types_ == b.types_ && a.priors_ == b.priors_;
    }

private:
    std::size_t width_ = 0;
    std::vector<InstanceType> types_;
    std::vector<ClassId> class_ids_;
    std::vector<ClassEntry> classes_;
    std::vector<std::uint64_t> priors_;
    std::uint64_t token_total_ = 0;
};

/// Collapses tokens into types with frequencies. Throws Error("empty corpus")
/// or Error("ragged features").
TypeBase build_type_base(std::span<const InstanceToken> tokens);

/// Total order used to pick one type out of a set of equally distant
/// candidates: higher type frequency, then higher class prior, then
/// smaller class label, then smaller feature string.
bool outranks(const TypeBase& base, TypeId a, TypeId b);

/// Types that share their feature vector with a differently-labelled type
/// that outranks them. Such a type can never be selected as a nearest
/// neighbour. Returned in ascending id order.
std::vector<TypeId> find_minority_ambiguities(const TypeBase& base);

/// Byte accounting: one byte per symbol, one per class label, two per
/// frequency field.
struct MemoryStats {
    std::uint64_t token_bytes = 0;
    std::uint64_t type_bytes = 0;
    std::uint64_t type_bytes_with_freq = 0;
    double reduction_pct = 0.0;
    double reduction_with_freq_pct = 0.0;
};

inline constexpr std::uint64_t kFrequencyFieldBytes = 2;

MemoryStats memory_stats(const TypeBase& base);
/// Same accounting from raw counts, e.g. for an edited base measured against
/// the token total of the unedited corpus.
MemoryStats memory_stats(std::uint64_t token_total, std::uint64_t type_count,
                         std::size_t width);

// Text serialization: "#typebase n=<n> tokens=<total>" then one
// "<symbols>\t<class>\t<frequency>" line per type in id order.
void write_type_base(std::ostream& out, const TypeBase& base);
std::string serialize_type_base(const TypeBase& base);
TypeBase read_type_base(std::istream& in);
TypeBase load_type_base(const std::string& path);
void save_type_base(const std::string& path, const TypeBase& base);

std::uint64_t checksum(const TypeBase& base);

}  // namespace mbl
