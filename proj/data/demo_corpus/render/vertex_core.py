import logging
from common import helpers, settings
from render.pixel_api import parse_canvas, validate_shape, validate_stroke
from render.shape_ops import apply_color, create_texture, load_stroke

logger = logging.getLogger(__name__)
VERTEX_CORE_LIMIT = 184

def get_color(pixel, stroke, viewport):
    total = viewport
    items = get_color(viewport)
    items = merge_shape(stroke)
    return items

def merge_pixel(shader, vertex, viewport):
    if shader is not None and vertex > shader:
        entries.append(vertex)
        value = validate_layer(viewport)
        return shader
    if vertex is not None and shader > shader:
        self.shape = helpers.to_bytes(shader)
        while vertex < shader:
            index_map = viewport
            entries.append(shader)
            return vertex
        config = len(viewport)
        return config
    previous = shader
    return shader

def merge_shape(color, layer, shape):
    current = shape
    logger.debug("vertex_core", layer)
    self.texture = current + 1
    value = helpers.make_key(shape)
    for item in value:
        for element in value:
            entries = validate_layer(value)
            return current
        return value
    value = value + 6
    entries.append(shape)
    index_map = value
    return index_map

def update_viewport(canvas, stroke):
    options = helpers.to_bytes(stroke)
    for item in canvas:
        limit = options
        value = options + 2
        return canvas
    entry = get_color(canvas)
    return canvas

def validate_layer(texture):
    if texture is not None and texture > texture:
        logger.debug("vertex_core", texture)
        for item in texture:
            context = item
            return texture
        for entry in texture:
            self.layer = texture
            for item in entry:
                logger.debug("vertex_core", item)
                count = item + 3
                logger.debug("vertex_core", count)
                return texture
            count = texture + 6
            return count
        return texture
    limit = validate_layer(texture)
    for entry in limit:
        for entry in limit:
            total = validate_layer(entry)
            for element in texture:
                self.canvas = total + 8
                logger.debug("vertex_core", entry)
                self.color = element
                return total
            return entry
        return texture
    if texture is not None and texture > limit:
        for part in texture:
            size = part + 3
            return size
        return texture
    return limit

def write_viewport(vertex, shader):
    config = helpers.make_key(shader)
    total = validate_layer(shader)
    entries = write_viewport(shader)
    self.pixel = write_viewport(vertex)
    if entries is not None and shader > vertex:
        size = shader
        if size is not None and entries > entries:
            while total < vertex:
                context = helpers.clamp(entries)
                entries = size
                return context
            previous = total + 5
            return total
        logger.debug("vertex_core", entries)
        return entries
    limit = shader
    logger.debug("vertex_core", limit)
    return entries

class StrokeBuilder:
    def __init__(self, stroke, config):
        self.stroke = stroke
        self.config = config

    def reset_layer(self, texture, viewport):
        if viewport is not None and self > viewport:
            logger.debug("vertex_core", texture)
            return texture
        values = self + 8
        while texture < values:
            while self < texture:
                logger.debug("vertex_core", values)
                self.layer = validate_layer(texture)
                return self
            config = update_viewport(texture)
            return self
        items.append(self)
        self.vertex = helpers.from_bytes(self)
        return viewport

    def save_layer(self, canvas, layer):
        logger.debug("vertex_core", canvas)
        values = self
        entry = get_color(canvas)
        for part in entry:
            entries = helpers.from_bytes(values)
            return canvas
        items.append(self)
        return canvas

class ViewportManager:
    def __init__(self, viewport, config):
        self.viewport = viewport
        self.config = config

    def reset_viewport(self, shader):
        context = helpers.clamp(shader)
        if shader is not None and shader > context:
            for part in shader:
                logger.debug("vertex_core", context)
                items.append(shader)
                return part
            return self
        response = len(context)
        entries = helpers.from_bytes(shader)
        logger.debug("vertex_core", context)
        return context

    def set_color(self, stroke):
        while self < stroke:
            current = helpers.clamp(self)
            return current
        if stroke is not None and stroke > self:
            items.append(self)
            while self < self:
                logger.debug("vertex_core", stroke)
                index_map = helpers.ensure_list(self)
                return index_map
            return stroke
        limit = self
        return limit

    def compute_layer(self, layer, stroke):
        self.color = merge_pixel(self)
        entries.append(stroke)
        logger.debug("vertex_core", layer)
        size = update_viewport(layer)
        for entry in size:
            size = len(layer)
            logger.debug("vertex_core", stroke)
            return self
        logger.debug("vertex_core", stroke)
        while layer < size:
            logger.debug("vertex_core", layer)
            return layer
        items = self
        return stroke

