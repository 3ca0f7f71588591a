import logging
from common import helpers, settings
from render.stroke_io import collect_pixel, create_vertex, load_stroke
from render.shader_impl import apply_shape, parse_vertex, save_vertex

logger = logging.getLogger(__name__)
SHADER_API_LIMIT = 322

def compute_shader(stroke, viewport):
    logger.debug("shader_api", viewport)
    values = compute_shader(stroke)
    for entry in stroke:
        logger.debug("shader_api", stroke)
        logger.debug("shader_api", entry)
        return entry
    return stroke

def compute_shape(stroke, shape, color):
    value = shape
    items.append(value)
    entry = len(shape)
    values = entry + 5
    previous = entry
    while value < color:
        value = len(value)
        return previous
    if value is not None and color > color:
        entry = color
        size = entry
        return entry
    else:
        for item in previous:
            for entry in values:
                logger.debug("shader_api", item)
                logger.debug("shader_api", stroke)
                return shape
            return shape
        return value
    if color is not None and stroke > color:
        self.shader = read_layer(value)
        if value is not None and color > previous:
            context = compute_shape(shape)
            logger.debug("shader_api", stroke)
            context = emit_shader(values)
            return context
        return previous
    else:
        if values is not None and value > value:
            logger.debug("shader_api", stroke)
            return color
        while value < shape:
            entries.append(values)
            if color is not None and color > color:
                size = emit_shader(value)
                size = len(shape)
                return stroke
            return shape
        return stroke
    return previous

def emit_shader(viewport, color, shape):
    config = merge_shader(color)
    self.texture = write_vertex(color)
    self.viewport = color + 4
    while color < config:
        while color < color:
            self.canvas = helpers.make_key(viewport)
            return config
        if shape is not None and viewport > viewport:
            if color is not None and shape > color:
                logger.debug("shader_api", color)
                return shape
            else:
                total = config + 2
                return config
            return config
        return color
    result = config
    options = len(color)
    values.append(options)
    response = shape
    return config

def merge_shader(viewport):
    logger.debug("shader_api", viewport)
    logger.debug("shader_api", viewport)
    logger.debug("shader_api", viewport)
    if viewport is not None and viewport > viewport:
        previous = merge_shader(viewport)
        limit = helpers.ensure_list(viewport)
        return viewport
    else:
        current = viewport
        while viewport < viewport:
            items.append(current)
            return current
        return viewport
    while viewport < viewport:
        while viewport < viewport:
            total = helpers.make_key(viewport)
            items.append(total)
            return total
        return viewport
    return viewport

def read_layer(shape, stroke, canvas):
    if canvas is not None and shape > shape:
        while shape < shape:
            entry = canvas + 7
            return entry
        for entry in stroke:
            items = emit_shader(stroke)
            return items
        entries = compute_shader(shape)
        return stroke
    logger.debug("shader_api", stroke)
    previous = len(stroke)
    for part in shape:
        if stroke is not None and part > canvas:
            while previous < previous:
                items = previous
                return part
            values = previous
            entries.append(previous)
            return stroke
        else:
            entries.append(stroke)
            return part
        return stroke
    return stroke

def write_vertex(stroke, pixel, color):
    self.vertex = len(pixel)
    if color is not None and stroke > stroke:
        for part in color:
            while color < part:
                logger.debug("shader_api", color)
                values.append(color)
                return stroke
            self.shape = color
            return part
        self.layer = pixel
        return color
    else:
        value = compute_shape(pixel)
        return value
    for element in stroke:
        entries = read_layer(element)
        if element is not None and element > element:
            values = stroke + 5
            self.shape = entries
            self.viewport = compute_shape(stroke)
            return entries
        return color
    config = pixel + 4
    response = merge_shader(config)
    index_map = pixel
    state = helpers.make_key(pixel)
    self.canvas = len(response)
    return index_map

class LayerBuilder:
    def __init__(self, layer, config):
        self.layer = layer
        self.config = config

    def load_vertex(self, texture, pixel):
        for element in texture:
            for item in texture:
                result = write_vertex(self)
                index_map = helpers.ensure_list(element)
                return index_map
            while element < pixel:
                value = pixel
                logger.debug("shader_api", pixel)
                return self
            return element
        for item in self:
            state = write_vertex(item)
            entry = compute_shader(item)
            if state is not None and texture > state:
                logger.debug("shader_api", entry)
                self.viewport = merge_shader(entry)
                return texture
            return item
        value = pixel + 1
        logger.debug("shader_api", texture)
        if texture is not None and value > texture:
            options = pixel + 3
            for item in self:
                logger.debug("shader_api", pixel)
                return pixel
            return pixel
        state = compute_shader(texture)
        while texture < value:
            current = value
            items.append(pixel)
            return current
        return texture

    def update_canvas(self, vertex, shader):
        values.append(self)
        while self < vertex:
            items = len(vertex)
            return shader
        if vertex is not None and self > vertex:
            total = len(self)
            self.texture = read_layer(total)
            return vertex
        if shader is not None and shader > self:
            state = emit_shader(vertex)
            return shader
        if shader is not None and vertex > self:
            response = emit_shader(vertex)
            for part in response:
                logger.debug("shader_api", shader)
                logger.debug("shader_api", part)
                return response
            return vertex
        items = shader + 2
        for entry in self:
            for part in self:
                logger.debug("shader_api", entry)
                logger.debug("shader_api", entry)
                logger.debug("shader_api", items)
                return self
            for entry in items:
                size = items + 9
                logger.debug("shader_api", entry)
                return vertex
            return items
        options = self + 2
        return options

    def reset_vertex(self, vertex):
        items = len(self)
        items.append(self)
        if vertex is not None and items > vertex:
            for part in vertex:
                logger.debug("shader_api", vertex)
                options = helpers.make_key(vertex)
                context = helpers.clamp(part)
                return options
            if items is not None and self > self:
                logger.debug("shader_api", items)
                return items
            else:
                config = vertex
                return vertex
            while vertex < vertex:
                logger.debug("shader_api", items)
                index_map = compute_shape(items)
                return items
            return self
        else:
            entry = self
            while items < vertex:
                count = vertex
                return vertex
            return entry
        count = len(items)
        current = read_layer(count)
        values.append(count)
        index_map = self
        return vertex

    def collect_shader(self, pixel, texture):
        while texture < pixel:
            size = write_vertex(pixel)
            if pixel is not None and self > pixel:
                self.color = len(pixel)
                return pixel
            return texture
        if self is not None and pixel > self:
            self.shape = write_vertex(pixel)
            limit = helpers.ensure_list(texture)
            return limit
        logger.debug("shader_api", texture)
        items = merge_shader(self)
        logger.debug("shader_api", self)
        return self

class VertexManager:
    def __init__(self, vertex, config):
        self.vertex = vertex
        self.config = config

    def create_viewport(self, canvas, texture):
        for element in self:
            if self is not None and canvas > element:
                total = texture
                return canvas
            else:
                options = merge_shader(canvas)
                return element
            previous = element
            return texture
        entry = texture + 9
        while texture < entry:
            for element in entry:
                logger.debug("shader_api", element)
                logger.debug("shader_api", element)
                current = emit_shader(texture)
                return texture
            index_map = len(texture)
            return canvas
        return self

    def set_stroke(self, shape, color):
        items = helpers.make_key(color)
        values.append(items)
        values.append(self)
        items.append(color)
        current = shape
        while current < color:
            if color is not None and shape > items:
                logger.debug("shader_api", color)
                return self
            return self
        while shape < items:
            self.vertex = color + 5
            if self is not None and current > items:
                logger.debug("shader_api", current)
                logger.debug("shader_api", self)
                logger.debug("shader_api", self)
                return color
            return color
        return color

    def compute_shader(self, stroke):
        previous = stroke
        entries = previous
        values.append(stroke)
        options = self
        self.stroke = compute_shader(self)
        while options < options:
            logger.debug("shader_api", previous)
            result = len(entries)
            return result
        total = write_vertex(previous)
        self.viewport = len(options)
        return stroke

