#pragma once

#include <string>
#include <vector>

#include "fhkit/monomial.hpp"

namespace fh {

// Box (a, b) with a along q and b along t; weight q^a t^b.
struct Box {
    int a = 0, b = 0;
    auto operator<=>(const Box&) const = default;
    bool operator==(const Box&) const = default;
    Monomial weight() const { return qt(a, b); }
};

// Parts are indexed by a: (a, b) lies in the diagram iff b < parts[a].
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;
    bool contains(const Box& x) const;
    std::vector<Box> boxes() const;  // ordered by (a, b)
    Partition transpose() const;
    Partition with(const Box& x) const;
    Partition without(const Box& x) const;
    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

std::vector<Partition> partitions_of(int n);

int content(const Box& x);  // a - b
int hook(const Partition& p, const Box& x);
int arm(const Partition& p, const Box& x);
int leg(const Partition& p, const Box& x);
int n_statistic(const Partition& p);  // sum of a over boxes

struct Corners {
    std::vector<Box> addable, removable;
};
Corners corners(const Partition& p);

class StandardTableau {
public:
    StandardTableau() = default;
    explicit StandardTableau(std::vector<Box> boxes);  // boxes[i] carries label i+1

    int size() const { return static_cast<int>(boxes_.size()); }
    const std::vector<Box>& boxes() const { return boxes_; }
    const Box& box(int label) const { return boxes_[label - 1]; }
    Partition shape() const;
    Monomial weight(int label) const { return box(label).weight(); }
    std::vector<Monomial> weights() const;
    StandardTableau restrict(int k) const;
    StandardTableau extend(const Box& x) const;
    StandardTableau transpose() const;
    bool operator==(const StandardTableau&) const = default;

private:
    std::vector<Box> boxes_;
};

std::vector<StandardTableau> enumerate_syt(const Partition& p);
std::vector<StandardTableau> all_syt(int n);

unsigned long long factorial(int n);
unsigned long long hook_length_count(const Partition& p);  // n!/prod h

// "[[1,2],[3]]": row a lists the labels of boxes (a, 0), (a, 1), ...
std::string to_string(const StandardTableau& t);
StandardTableau parse_tableau(const std::string& text);
std::string to_string(const Partition& p);
Partition parse_partition(const std::string& text);
std::string to_string(const Box& b);

}  // namespace fh
