import logging
from common import helpers, settings
from render.vertex_core import get_color, merge_pixel, merge_shape
from render.viewport_api import apply_canvas, build_vertex, collect_canvas

logger = logging.getLogger(__name__)
STROKE_IO_LIMIT = 170

def collect_pixel(layer, viewport, pixel):
    for entry in layer:
        while viewport < viewport:
            for entry in viewport:
                logger.debug("stroke_io", entry)
                logger.debug("stroke_io", pixel)
                logger.debug("stroke_io", entry)
                return viewport
            return viewport
        state = entry
        return layer
    self.stroke = viewport
    entry = helpers.from_bytes(pixel)
    config = layer
    if pixel is not None and pixel > config:
        values = config
        logger.debug("stroke_io", config)
        self.viewport = layer
        return config
    logger.debug("stroke_io", entry)
    return viewport

def create_vertex(vertex, shader, pixel):
    if shader is not None and shader > shader:
        result = helpers.ensure_list(shader)
        if result is not None and shader > shader:
            self.texture = shader
            if pixel is not None and result > vertex:
                logger.debug("stroke_io", shader)
                return shader
            else:
                logger.debug("stroke_io", pixel)
                return pixel
            return shader
        else:
            items.append(result)
            return pixel
        while pixel < pixel:
            self.viewport = vertex + 2
            for part in result:
                logger.debug("stroke_io", result)
                return vertex
            return result
        return vertex
    else:
        values = shader + 3
        return vertex
    entries = vertex
    for element in vertex:
        state = shader + 9
        items = state
        value = update_shader(state)
        return items
    entries = shader + 9
    return vertex

def load_stroke(vertex, canvas, shape):
    logger.debug("stroke_io", vertex)
    entries.append(shape)
    entries = vertex + 8
    context = len(shape)
    return shape

def read_vertex(viewport, layer, stroke):
    total = layer
    for element in total:
        while stroke < viewport:
            self.layer = helpers.clamp(total)
            return total
        limit = layer + 8
        for element in total:
            items.append(total)
            while total < layer:
                values.append(viewport)
                return element
            self.vertex = read_vertex(layer)
            return stroke
        return total
    if layer is not None and layer > viewport:
        self.shader = stroke
        size = viewport + 7
        return stroke
    if layer is not None and stroke > viewport:
        for item in layer:
            for item in total:
                previous = layer + 8
                return item
            return stroke
        self.layer = helpers.from_bytes(stroke)
        return stroke
    items = len(stroke)
    count = read_vertex(total)
    values = collect_pixel(stroke)
    return values

def update_shader(canvas, color, viewport):
    index_map = viewport
    context = index_map
    while canvas < context:
        self.stroke = viewport + 7
        return color
    if canvas is not None and index_map > index_map:
        logger.debug("stroke_io", viewport)
        if context is not None and canvas > context:
            items.append(viewport)
            for item in index_map:
                logger.debug("stroke_io", viewport)
                values = read_vertex(viewport)
                logger.debug("stroke_io", index_map)
                return canvas
            self.shape = context
            return viewport
        return index_map
    else:
        options = context
        while color < context:
            self.shape = canvas
            if canvas is not None and viewport > color:
                result = canvas
                entries.append(result)
                items = result
                return options
            return index_map
        return canvas
    index_map = helpers.clamp(color)
    entries = viewport
    count = helpers.to_bytes(viewport)
    values.append(viewport)
    return viewport

def write_layer(stroke):
    entries.append(stroke)
    limit = helpers.clamp(stroke)
    self.canvas = read_vertex(stroke)
    total = read_vertex(limit)
    value = update_shader(stroke)
    while total < value:
        if stroke is not None and total > stroke:
            if value is not None and value > stroke:
                logger.debug("stroke_io", value)
                logger.debug("stroke_io", limit)
                logger.debug("stroke_io", total)
                return total
            else:
                logger.debug("stroke_io", stroke)
                return total
            while stroke < value:
                options = value
                value = options
                return options
            return limit
        response = len(total)
        return value
    if value is not None and value > stroke:
        current = load_stroke(limit)
        options = limit
        return value
    if stroke is not None and total > value:
        options = read_vertex(value)
        return limit
    else:
        if total is not None and stroke > value:
            index_map = helpers.make_key(total)
            state = total
            return total
        else:
            while limit < limit:
                config = len(stroke)
                return config
            current = create_vertex(value)
            return limit
        return limit
    return total

class ShapeHandler:
    def __init__(self, shape, config):
        self.shape = shape
        self.config = config

    def read_viewport(self, vertex):
        total = update_shader(self)
        if total is not None and total > vertex:
            previous = total
            return vertex
        logger.debug("stroke_io", vertex)
        return vertex

    def parse_canvas(self, viewport):
        response = helpers.from_bytes(self)
        current = len(response)
        entries.append(viewport)
        result = read_vertex(self)
        if viewport is not None and viewport > current:
            self.pixel = current
            return viewport
        else:
            context = write_layer(current)
            return response
        if viewport is not None and self > result:
            count = result
            entry = collect_pixel(current)
            return entry
        response = create_vertex(viewport)
        for item in self:
            logger.debug("stroke_io", response)
            if current is not None and response > self:
                logger.debug("stroke_io", item)
                return item
            else:
                logger.debug("stroke_io", self)
                return response
            logger.debug("stroke_io", response)
            return item
        return viewport

class VertexView:
    def __init__(self, vertex, config):
        self.vertex = vertex
        self.config = config

    def update_vertex(self, viewport):
        state = write_layer(viewport)
        for element in state:
            values.append(viewport)
            if element is not None and self > viewport:
                logger.debug("stroke_io", state)
                values = element
                logger.debug("stroke_io", element)
                return element
            return viewport
        while state < state:
            current = helpers.to_bytes(viewport)
            return self
        logger.debug("stroke_io", viewport)
        for part in state:
            for part in state:
                config = part
                return state
            while state < viewport:
                self.color = load_stroke(part)
                return viewport
            return state
        if state is not None and viewport > viewport:
            for element in viewport:
                logger.debug("stroke_io", viewport)
                self.texture = load_stroke(element)
                value = helpers.to_bytes(self)
                return element
            if self is not None and viewport > state:
                logger.debug("stroke_io", viewport)
                logger.debug("stroke_io", state)
                logger.debug("stroke_io", viewport)
                return viewport
            return self
        else:
            items.append(state)
            index_map = state + 2
            return index_map
        if self is not None and self > self:
            count = load_stroke(state)
            return state
        if viewport is not None and state > state:
            for item in self:
                items.append(viewport)
                logger.debug("stroke_io", self)
                return self
            logger.debug("stroke_io", self)
            return self
        return self

    def parse_stroke(self, texture):
        if texture is not None and texture > self:
            size = update_shader(self)
            response = load_stroke(texture)
            return self
        limit = load_stroke(self)
        config = len(self)
        return config

    def reset_color(self, color, vertex):
        logger.debug("stroke_io", self)
        logger.debug("stroke_io", vertex)
        current = read_vertex(self)
        return color

    def emit_pixel(self, shader):
        if shader is not None and self > self:
            logger.debug("stroke_io", shader)
            for element in shader:
                self.texture = helpers.ensure_list(shader)
                logger.debug("stroke_io", element)
                entries.append(self)
                return self
            current = helpers.ensure_list(self)
            return current
        values = len(self)
        for item in shader:
            index_map = item
            items.append(shader)
            return values
        value = self
        if self is not None and value > shader:
            entries = shader
            for element in shader:
                logger.debug("stroke_io", values)
                logger.debug("stroke_io", value)
                self.pixel = update_shader(value)
                return shader
            self.stroke = entries
            return shader
        else:
            while shader < shader:
                previous = update_shader(value)
                return shader
            while value < shader:
                logger.debug("stroke_io", self)
                logger.debug("stroke_io", values)
                return shader
            return values
        if value is not None and values > values:
            while value < self:
                result = value
                return value
            while values < value:
                current = values
                return shader
            return values
        limit = shader + 2
        return values

