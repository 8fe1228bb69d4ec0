// Python bindings: numpy arrays in, numpy arrays out. 2D int arrays map to
// planes, HxWx3 arrays to RGB images, bytes to XOR keys.

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "iwtsteg/embed.hpp"
#include "iwtsteg/iwt.hpp"
#include "iwtsteg/metrics.hpp"
#include "iwtsteg/pipeline.hpp"

namespace py = pybind11;
using namespace iwtsteg;

namespace {

using IntArray = py::array_t<std::int32_t, py::array::c_style | py::array::forcecast>;

PixelPlane plane_from(const IntArray& a, const char* what) {
    if (a.ndim() != 2)
        raise(errc::dimension, std::string(what) + " must be a 2D array");
    PixelPlane p(static_cast<int>(a.shape(0)), static_cast<int>(a.shape(1)));
    std::copy(a.data(), a.data() + a.size(), p.data().begin());
    return p;
}

py::array_t<std::int32_t> array_from(const PixelPlane& p) {
    py::array_t<std::int32_t> a({p.rows(), p.cols()});
    std::copy(p.data().begin(), p.data().end(), a.mutable_data());
    return a;
}

py::array_t<std::uint8_t> u8_array_from(const PixelPlane& p) {
    py::array_t<std::uint8_t> a({p.rows(), p.cols()});
    std::uint8_t* out = a.mutable_data();
    for (std::int32_t v : p.data())
        *out++ = static_cast<std::uint8_t>(std::clamp(v, 0, 255));
    return a;
}

RgbImage rgb_from(const IntArray& a, const char* what) {
    if (a.ndim() != 3 || a.shape(2) != 3)
        raise(errc::dimension, std::string(what) + " must be an HxWx3 array");
    const int rows = static_cast<int>(a.shape(0));
    const int cols = static_cast<int>(a.shape(1));
    RgbImage img{PixelPlane(rows, cols), PixelPlane(rows, cols), PixelPlane(rows, cols)};
    const std::int32_t* src = a.data();
    for (std::size_t i = 0, n = static_cast<std::size_t>(rows) * cols; i < n; ++i) {
        img.r.data()[i] = src[i * 3];
        img.g.data()[i] = src[i * 3 + 1];
        img.b.data()[i] = src[i * 3 + 2];
    }
    return img;
}

py::array_t<std::uint8_t> u8_array_from(const RgbImage& img) {
    py::array_t<std::uint8_t> a({img.rows(), img.cols(), 3});
    std::uint8_t* out = a.mutable_data();
    for (std::size_t i = 0; i < img.r.sample_count(); ++i) {
        *out++ = static_cast<std::uint8_t>(std::clamp(img.r.data()[i], 0, 255));
        *out++ = static_cast<std::uint8_t>(std::clamp(img.g.data()[i], 0, 255));
        *out++ = static_cast<std::uint8_t>(std::clamp(img.b.data()[i], 0, 255));
    }
    return a;
}

XorKey key_from(const py::bytes& b) {
    std::string s = b;
    XorKey k;
    k.bytes.assign(s.begin(), s.end());
    return k;
}

py::array_t<std::uint32_t> entries_from(const BlockKey& key) {
    py::array_t<std::uint32_t> a(static_cast<py::ssize_t>(key.entries.size()));
    std::copy(key.entries.begin(), key.entries.end(), a.mutable_data());
    return a;
}

WaveletKernel kernel_from(const std::string& name) {
    if (name == "s_transform") return WaveletKernel::s_transform;
    if (name == "cdf22") return WaveletKernel::cdf22;
    raise(errc::format, "kernel must be 's_transform' or 'cdf22'");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "integer-wavelet image steganography core";

    // StegoError(message, code_name); .code is attached in __init__.py.
    static py::handle exc =
        py::exception<StegoError>(m, "StegoError").release();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const StegoError& e) {
            py::object args = py::make_tuple(e.what(), errc_name(e.code()));
            PyErr_SetObject(exc.ptr(), args.ptr());
        }
    });

    m.def(
        "rgb_to_ycc",
        [](const IntArray& rgb, const std::string& mode) {
            YccImage ycc = rgb_to_ycc(rgb_from(rgb, "rgb"), mode_from_name(mode));
            return py::make_tuple(array_from(ycc.y), array_from(ycc.cb), array_from(ycc.cr));
        },
        py::arg("rgb"), py::arg("mode") = "reversible",
        "HxWx3 uint8 -> (y, cb, cr) int32 planes");

    m.def(
        "ycc_to_rgb",
        [](const IntArray& y, const IntArray& cb, const IntArray& cr,
           const std::string& mode) {
            YccImage ycc{plane_from(y, "y"), plane_from(cb, "cb"), plane_from(cr, "cr"),
                         mode_from_name(mode)};
            RgbConversion conv = ycc_to_rgb(ycc, ycc.mode);
            return py::make_tuple(u8_array_from(conv.image), conv.clamped_samples);
        },
        py::arg("y"), py::arg("cb"), py::arg("cr"), py::arg("mode") = "reversible",
        "(y, cb, cr) -> (HxWx3 uint8, clamped_sample_count)");

    m.def(
        "iwt_forward",
        [](const IntArray& plane, const std::string& kernel) {
            SubbandSet b = iwt_forward(plane_from(plane, "plane"), kernel_from(kernel));
            return py::make_tuple(array_from(b.ll), array_from(b.lh), array_from(b.hl),
                                  array_from(b.hh));
        },
        py::arg("plane"), py::arg("kernel") = "s_transform",
        "even-dimensioned 2D int array -> (ll, lh, hl, hh)");

    m.def(
        "iwt_inverse",
        [](const IntArray& ll, const IntArray& lh, const IntArray& hl, const IntArray& hh,
           const std::string& kernel) {
            SubbandSet b;
            b.ll = plane_from(ll, "ll");
            b.lh = plane_from(lh, "lh");
            b.hl = plane_from(hl, "hl");
            b.hh = plane_from(hh, "hh");
            b.origin_rows = b.ll.rows() * 2;
            b.origin_cols = b.ll.cols() * 2;
            return array_from(iwt_inverse(b, kernel_from(kernel)));
        },
        py::arg("ll"), py::arg("lh"), py::arg("hl"), py::arg("hh"),
        py::arg("kernel") = "s_transform", "(ll, lh, hl, hh) -> 2D int array");

    m.def(
        "build_key",
        [](const IntArray& secret_ll, const IntArray& cover_ll, int block_size) {
            return entries_from(build_key(plane_from(secret_ll, "secret_ll"),
                                          plane_from(cover_ll, "cover_ll"), block_size));
        },
        py::arg("secret_ll"), py::arg("cover_ll"), py::arg("block_size") = 2,
        "per-secret-block addresses of the best-matching cover blocks");

    m.def(
        "reconstruct_ll",
        [](const py::array_t<std::uint32_t, py::array::c_style | py::array::forcecast>&
               entries,
           std::pair<int, int> secret_ll_shape, const IntArray& cover_ll, int block_size) {
            PixelPlane cover = plane_from(cover_ll, "cover_ll");
            BlockKey key;
            key.entries.assign(entries.data(), entries.data() + entries.size());
            key.secret_grid =
                partition(secret_ll_shape.first, secret_ll_shape.second, block_size);
            key.cover_grid = partition(cover, block_size);
            return array_from(reconstruct_ll(key, cover));
        },
        py::arg("entries"), py::arg("secret_ll_shape"), py::arg("cover_ll"),
        py::arg("block_size") = 2, "assemble a secret-LL approximation from cover blocks");

    m.def(
        "encode",
        [](const IntArray& cover, const IntArray& secret1, const IntArray& secret2,
           const py::bytes& key, const std::string& mode) {
            EncodeResult res =
                encode(rgb_from(cover, "cover"), plane_from(secret1, "secret1"),
                       plane_from(secret2, "secret2"), key_from(key), mode_from_name(mode));
            py::dict d;
            d["stego"] = u8_array_from(res.stego);
            d["psnr_db"] = res.report.psnr_db;
            d["mse"] = res.report.mse;
            d["payload1_bits"] = res.digest.payload1_bits;
            d["payload2_bits"] = res.digest.payload2_bits;
            d["capacity_bits"] = res.digest.capacity_bits;
            d["conditioned_samples"] = res.digest.conditioned_samples;
            d["verified"] = res.digest.verified;
            d["key1"] = entries_from(res.key1);
            d["key2"] = entries_from(res.key2);
            return d;
        },
        py::arg("cover"), py::arg("secret1"), py::arg("secret2"), py::arg("key"),
        py::arg("mode") = "reversible",
        "embed both secrets' keys; returns stego image and diagnostics");

    m.def(
        "decode",
        [](const IntArray& stego, const py::bytes& key, const std::string& mode) {
            DecodeResult res = decode(rgb_from(stego, "stego"), key_from(key),
                                      mode_from_name(mode));
            py::dict d;
            d["secret1"] = u8_array_from(res.secret1);
            d["secret2"] = u8_array_from(res.secret2);
            d["key1"] = entries_from(res.key1);
            d["key2"] = entries_from(res.key2);
            return d;
        },
        py::arg("stego"), py::arg("key"), py::arg("mode") = "reversible",
        "recover both secrets from a stego image");

    m.def(
        "mse",
        [](const IntArray& a, const IntArray& b) {
            if (a.ndim() == 3)
                return rgb_quality(rgb_from(a, "a"), rgb_from(b, "b")).mse;
            return mse(plane_from(a, "a"), plane_from(b, "b"));
        },
        py::arg("a"), py::arg("b"), "mean squared error, 2D planes or HxWx3 images");

    m.def(
        "psnr",
        [](const IntArray& a, const IntArray& b, int peak) {
            if (a.ndim() == 3)
                return rgb_quality(rgb_from(a, "a"), rgb_from(b, "b"), peak).psnr_db;
            return psnr(plane_from(a, "a"), plane_from(b, "b"), peak);
        },
        py::arg("a"), py::arg("b"), py::arg("peak") = 255,
        "peak signal-to-noise ratio in dB (inf for identical inputs)");

    m.attr("COVER_MARGIN") = kCoverMargin;
}
