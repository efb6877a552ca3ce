#ifndef DIFFHARM_TENSOR_HPP
#define DIFFHARM_TENSOR_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace diffharm {

struct Shape {
    int height = 0;
    int width = 0;
    int channels = 0;

    bool operator==(const Shape&) const = default;
    std::size_t size() const {
        return static_cast<std::size_t>(height) * width * channels;
    }
    std::string str() const;
};

// Dense H x W x C array of doubles, channel-interleaved. Used for pixel
// buffers and latent states alike; values are not range-restricted.
struct Tensor {
    Shape shape;
    std::vector<double> data;

    Tensor() = default;
    explicit Tensor(Shape s, double fill = 0.0)
        : shape(s), data(s.size(), fill) {}

    double& at(int y, int x, int c) {
        return data[(static_cast<std::size_t>(y) * shape.width + x) * shape.channels + c];
    }
    double at(int y, int x, int c) const {
        return data[(static_cast<std::size_t>(y) * shape.width + x) * shape.channels + c];
    }
    std::size_t size() const { return data.size(); }
};

void require_same_shape(const Tensor& a, const Tensor& b, const char* where);

Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor scale(const Tensor& a, double s);
// a += s * b
void axpy(Tensor& a, double s, const Tensor& b);

double dot(const Tensor& a, const Tensor& b);
double max_abs(const Tensor& a);
double max_abs_diff(const Tensor& a, const Tensor& b);

} // namespace diffharm

#endif
