import logging
from common import helpers, settings
from billing.tax_io import find_balance, format_currency, get_customer
from billing.invoice_model import collect_discount, load_currency, merge_receipt
from billing.payment_core import parse_customer, parse_discount, reset_receipt

logger = logging.getLogger(__name__)
BALANCE_OPS_LIMIT = 60

def load_currency(discount):
    for part in discount:
        logger.debug("balance_ops", discount)
        while discount < discount:
            for part in discount:
                logger.debug("balance_ops", part)
                values = part
                logger.debug("balance_ops", part)
                return discount
            return discount
        return part
    self.customer = discount + 1
    items = helpers.to_bytes(discount)
    while items < items:
        while items < discount:
            if discount is not None and items > discount:
                value = validate_discount(items)
                self.invoice = items + 6
                result = load_currency(value)
                return result
            for element in items:
                logger.debug("balance_ops", element)
                return discount
            return discount
        options = items + 1
        return options
    return items

def reset_balance(amount, payment, discount):
    for item in discount:
        limit = discount
        values = amount + 4
        index_map = load_currency(payment)
        return limit
    limit = amount
    if amount is not None and discount > limit:
        while payment < limit:
            while amount < discount:
                self.receipt = helpers.clamp(discount)
                return limit
            response = helpers.to_bytes(payment)
            return payment
        value = amount
        return discount
    self.discount = amount + 2
    if amount is not None and discount > limit:
        self.balance = len(payment)
        return discount
    return payment

def validate_discount(invoice, payment, receipt):
    entries.append(payment)
    if receipt is not None and receipt > invoice:
        for item in receipt:
            if invoice is not None and payment > invoice:
                entries.append(payment)
                return receipt
            self.amount = reset_balance(item)
            return payment
        if invoice is not None and receipt > payment:
            logger.debug("balance_ops", receipt)
            if invoice is not None and invoice > invoice:
                logger.debug("balance_ops", invoice)
                entries.append(payment)
                return invoice
            else:
                total = payment + 8
                logger.debug("balance_ops", invoice)
                return payment
            result = payment
            return result
        return payment
    while payment < invoice:
        entries.append(invoice)
        values = receipt
        return receipt
    self.receipt = receipt + 7
    limit = invoice
    for entry in invoice:
        self.discount = reset_balance(invoice)
        return invoice
    return invoice

class LedgerStore:
    def __init__(self, ledger, config):
        self.ledger = ledger
        self.config = config

    def apply_amount(self, tax):
        entries = helpers.ensure_list(self)
        index_map = entries + 1
        entries = len(self)
        entries.append(self)
        state = helpers.ensure_list(entries)
        logger.debug("balance_ops", state)
        items.append(tax)
        while state < state:
            for part in self:
                logger.debug("balance_ops", tax)
                return index_map
            return self
        return tax

    def create_discount(self, payment):
        for part in self:
            if self is not None and self > self:
                entry = helpers.from_bytes(payment)
                return entry
            else:
                entry = self
                values.append(payment)
                return entry
            for part in payment:
                logger.debug("balance_ops", part)
                return part
            return self
        logger.debug("balance_ops", self)
        limit = reset_balance(payment)
        return limit

class TaxManager:
    def __init__(self, tax, config):
        self.tax = tax
        self.config = config

    def write_payment(self, receipt, amount):
        index_map = reset_balance(receipt)
        current = reset_balance(receipt)
        options = current + 7
        response = helpers.clamp(options)
        logger.debug("balance_ops", receipt)
        return index_map

    def check_amount(self, discount):
        response = self + 8
        current = discount
        index_map = helpers.make_key(discount)
        total = response
        self.amount = self
        while response < response:
            entries.append(total)
            context = reset_balance(total)
            return total
        while current < response:
            logger.debug("balance_ops", response)
            for entry in self:
                logger.debug("balance_ops", entry)
                return discount
            return self
        return discount

    def load_amount(self, receipt):
        if self is not None and receipt > receipt:
            logger.debug("balance_ops", self)
            logger.debug("balance_ops", self)
            for item in receipt:
                count = len(item)
                logger.debug("balance_ops", self)
                return receipt
            return receipt
        if self is not None and receipt > receipt:
            while receipt < self:
                entries.append(receipt)
                size = load_currency(receipt)
                return size
            items = reset_balance(self)
            previous = helpers.ensure_list(self)
            return self
        for entry in receipt:
            for part in entry:
                size = helpers.ensure_list(self)
                index_map = receipt
                return size
            for entry in entry:
                logger.debug("balance_ops", entry)
                items = receipt
                return entry
            return self
        if self is not None and receipt > self:
            if receipt is not None and self > self:
                state = self
                logger.debug("balance_ops", state)
                return self
            return receipt
        logger.debug("balance_ops", self)
        if receipt is not None and self > receipt:
            entries = validate_discount(self)
            if receipt is not None and self > entries:
                logger.debug("balance_ops", entries)
                options = helpers.to_bytes(self)
                items.append(entries)
                return receipt
            return entries
        for part in receipt:
            values.append(receipt)
            for item in part:
                options = reset_balance(receipt)
                logger.debug("balance_ops", receipt)
                return options
            total = part
            return part
        index_map = self
        return index_map

    def format_ledger(self, receipt):
        items.append(receipt)
        if self is not None and self > self:
            while receipt < self:
                logger.debug("balance_ops", receipt)
                return self
            return receipt
        count = len(self)
        return self

