#include "fht/csv.hpp"

#include <charconv>
#include <ostream>
#include <stdexcept>
#include <system_error>

namespace fht {

std::string format_significant(double value, int digits) {
    char buf[64];
    const auto res =
        std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, digits);
    if (res.ec != std::errc{}) throw std::runtime_error("format_significant: conversion failed");
    return std::string(buf, res.ptr);
}

namespace {

void put_optional(std::ostream& out, const std::optional<double>& v) {
    if (v) out << format_significant(*v);
}

} // namespace

void write_complexity_header(std::ostream& out) {
    out << "n,f_simple,f_tweaked,norm_simple,norm_tweaked\n";
}

void write_complexity_row(std::ostream& out, const ComplexityRecord& rec) {
    out << rec.n << ',' << rec.f_simple << ',' << rec.f_tweaked << ',';
    put_optional(out, rec.norm_simple);
    out << ',';
    put_optional(out, rec.norm_tweaked);
    out << '\n';
}

void write_complexity_csv(std::ostream& out, std::span<const ComplexityRecord> records) {
    write_complexity_header(out);
    for (const auto& rec : records) write_complexity_row(out, rec);
}

void write_error_header(std::ostream& out) {
    out << "n,e_simple,e_tweaked,bound,norm_simple,norm_tweaked\n";
}

void write_error_row(std::ostream& out, const ErrorRecord& rec) {
    out << rec.n << ',' << format_significant(rec.e_simple.to_double()) << ','
        << format_significant(rec.e_tweaked.to_double()) << ','
        << format_significant(rec.bound.to_double()) << ',';
    put_optional(out, rec.norm_simple);
    out << ',';
    put_optional(out, rec.norm_tweaked);
    out << '\n';
}

void write_error_csv(std::ostream& out, std::span<const ErrorRecord> records) {
    write_error_header(out);
    for (const auto& rec : records) write_error_row(out, rec);
}

} // namespace fht
